//! Independent reference computations used only by tests.

#![allow(dead_code)]

pub mod figures;

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use tqchar::{DynkinDiagram, TPoly};

/// Coefficients of an ordinary integer polynomial, constant term first.
type Poly = Vec<i64>;

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact long division; panics on a nonzero remainder.
fn poly_div_exact(num: &Poly, den: &Poly) -> Poly {
    let mut rem = num.clone();
    let dl = den.len();
    let lead = *den.last().unwrap();
    assert!(lead == 1 || lead == -1);
    let mut q = vec![0; rem.len() + 1 - dl];
    for i in (0..q.len()).rev() {
        let c = rem[i + dl - 1] / lead;
        q[i] = c;
        for (j, d) in den.iter().enumerate() {
            rem[i + j] -= c * d;
        }
    }
    assert!(rem.iter().all(|&x| x == 0), "inexact division");
    q
}

/// `1 - q^k`.
fn one_minus_q_pow(k: usize) -> Poly {
    let mut p = vec![0; k + 1];
    p[0] = 1;
    p[k] -= 1;
    p
}

/// Balanced Gaussian binomial from the product formula
/// `prod_{i=1}^r (1 - q^{n-i+1}) / (1 - q^i)` in `q = t^2`, recentred by
/// `t^{-r(n-r)}`.
pub fn t_binomial_product(n: u32, r: u32) -> TPoly {
    if r > n {
        return TPoly::zero();
    }
    let (n, r) = (n as usize, r as usize);
    let mut num: Poly = vec![1];
    let mut den: Poly = vec![1];
    for i in 1..=r {
        num = poly_mul(&num, &one_minus_q_pow(n - i + 1));
        den = poly_mul(&den, &one_minus_q_pow(i));
    }
    let g = poly_div_exact(&num, &den);
    let shift = (r * (n - r)) as i32;
    TPoly::from_terms(
        g.iter()
            .enumerate()
            .map(|(k, &c)| (2 * k as i32 - shift, c)),
    )
}

/// Positive roots in simple-root coordinates, grown by the simply-laced rule:
/// `beta + alpha_i` is a root exactly when `<beta, alpha_i> = -1`.
pub fn positive_roots(c: &[Vec<i32>]) -> Vec<Vec<i32>> {
    let n = c.len();
    let pair = |b: &[i32], i: usize| -> i32 { (0..n).map(|j| b[j] * c[j][i]).sum() };
    let mut roots: BTreeSet<Vec<i32>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        roots.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(b) = queue.pop_front() {
        for i in 0..n {
            if pair(&b, i) == -1 {
                let mut x = b.clone();
                x[i] += 1;
                if roots.insert(x.clone()) {
                    queue.push_back(x);
                }
            }
        }
    }
    roots.into_iter().collect()
}

/// Weight multiplicities of the simple module of highest weight `lambda` for
/// a simply-laced Cartan matrix, by Freudenthal's formula. Weights are in
/// fundamental-weight coordinates.
pub struct Freudenthal {
    c: Vec<Vec<i32>>,
    lambda: Vec<i32>,
    roots: Vec<Vec<i32>>,
    memo: BTreeMap<Vec<i32>, i64>,
}

impl Freudenthal {
    pub fn new(d: &DynkinDiagram, lambda: &[i32]) -> Self {
        let c = d.cartan_matrix();
        let roots = positive_roots(&c);
        Self {
            c,
            lambda: lambda.to_vec(),
            roots,
            memo: BTreeMap::new(),
        }
    }

    fn n(&self) -> usize {
        self.c.len()
    }

    /// `lambda - sum n_i alpha_i`.
    fn weight_of(&self, depth: &[i32]) -> Vec<i32> {
        (0..self.n())
            .map(|i| self.lambda[i] - (0..self.n()).map(|j| depth[j] * self.c[j][i]).sum::<i32>())
            .collect()
    }

    /// Multiplicity of `lambda - sum n_i alpha_i`.
    pub fn mult_depth(&mut self, depth: &[i32]) -> i64 {
        // move to the dominant Weyl conjugate
        let mut depth = depth.to_vec();
        loop {
            if depth.iter().any(|&x| x < 0) {
                return 0;
            }
            let mu = self.weight_of(&depth);
            match (0..self.n()).find(|&i| mu[i] < 0) {
                Some(i) => depth[i] += mu[i],
                None => break,
            }
        }
        if let Some(&m) = self.memo.get(&depth) {
            return m;
        }
        let m = if depth.iter().all(|&x| x == 0) {
            1
        } else {
            let n = self.n();
            let mut denom: i64 = 2 * (0..n)
                .map(|i| depth[i] as i64 * (self.lambda[i] as i64 + 1))
                .sum::<i64>();
            for i in 0..n {
                for j in 0..n {
                    denom -= depth[i] as i64 * self.c[i][j] as i64 * depth[j] as i64;
                }
            }
            assert!(denom > 0);
            let mu = self.weight_of(&depth);
            let mut numer = 0i64;
            for a in self.roots.clone() {
                let mu_a: i64 = (0..n).map(|i| a[i] as i64 * mu[i] as i64).sum();
                let mut j = 1;
                loop {
                    let up: Vec<i32> = (0..n).map(|i| depth[i] - j * a[i]).collect();
                    if up.iter().any(|&x| x < 0) {
                        break;
                    }
                    numer += (mu_a + 2 * j as i64) * self.mult_depth(&up);
                    j += 1;
                }
            }
            numer *= 2;
            assert_eq!(numer % denom, 0, "Freudenthal quotient not integral");
            numer / denom
        };
        self.memo.insert(depth, m);
        m
    }

    /// Full character: weight → multiplicity, over all weights.
    pub fn character(&mut self) -> BTreeMap<Vec<i32>, i64> {
        let n = self.n();
        let mut out = BTreeMap::new();
        let mut seen = BTreeSet::from([vec![0; n]]);
        let mut queue = VecDeque::from([vec![0; n]]);
        while let Some(depth) = queue.pop_front() {
            let m = self.mult_depth(&depth);
            if m == 0 {
                continue;
            }
            out.insert(self.weight_of(&depth), m);
            for i in 0..n {
                let mut next = depth.clone();
                next[i] += 1;
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        out
    }
}

/// Weyl dimension formula `prod_{alpha > 0} <lambda + rho, alpha> / <rho, alpha>`.
pub fn weyl_dimension(d: &DynkinDiagram, lambda: &[u32]) -> i64 {
    let roots = positive_roots(&d.cartan_matrix());
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for a in roots {
        num *= a
            .iter()
            .zip(lambda)
            .map(|(&x, &l)| x as i128 * (l as i128 + 1))
            .sum::<i128>();
        den *= a.iter().map(|&x| x as i128).sum::<i128>();
    }
    assert_eq!(num % den, 0);
    (num / den) as i64
}
