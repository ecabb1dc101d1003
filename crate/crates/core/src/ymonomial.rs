//! Laurent monomials in the variables `Y_{k,a}` over a symbolic spectral
//! lattice, the affine root monomials `A_{k,a}`, and the order and pairing
//! built from them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::cartan::DynkinDiagram;
use crate::error::{Error, Result};

/// The formal point `s_orbit * eps^step`. Points in different orbits are never
/// related by a power of `eps`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Spectral {
    pub orbit: u32,
    pub step: i32,
}

impl Spectral {
    pub const fn new(orbit: u32, step: i32) -> Self {
        Self { orbit, step }
    }

    /// Multiplication by `eps^n`.
    pub const fn shift(self, n: i32) -> Self {
        Self {
            orbit: self.orbit,
            step: self.step + n,
        }
    }
}

/// A variable `Y_{vertex, at}`. The derived order is the canonical order
/// `(vertex, orbit, step)` used for every serialization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var {
    pub vertex: usize,
    pub at: Spectral,
}

impl Var {
    pub const fn new(vertex: usize, orbit: u32, step: i32) -> Self {
        Self {
            vertex,
            at: Spectral::new(orbit, step),
        }
    }
}

/// Finitely supported integer map over variables.
pub type ExponentMap = BTreeMap<Var, i32>;

/// Product of `Y_{k,a}^e`, kept sorted by variable with no zero exponents.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<(Var, i32)>);

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn y(vertex: usize, at: Spectral) -> Self {
        Self(vec![(Var { vertex, at }, 1)])
    }

    pub fn from_factors(factors: impl IntoIterator<Item = (Var, i32)>) -> Self {
        let mut map = ExponentMap::new();
        for (v, e) in factors {
            *map.entry(v).or_insert(0) += e;
        }
        Self::from_map(map)
    }

    pub fn from_map(map: ExponentMap) -> Self {
        Self(map.into_iter().filter(|&(_, e)| e != 0).collect())
    }

    pub fn to_map(&self) -> ExponentMap {
        self.0.iter().copied().collect()
    }

    pub fn factors(&self) -> &[(Var, i32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, v: Var) -> i32 {
        self.0
            .binary_search_by(|(w, _)| w.cmp(&v))
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&(_, e)| e > 0)
    }

    pub fn orbits(&self) -> BTreeSet<u32> {
        self.0.iter().map(|(v, _)| v.at.orbit).collect()
    }

    /// Factors of colour `k` as `(point, exponent)`.
    pub fn color(&self, k: usize) -> impl Iterator<Item = (Spectral, i32)> + '_ {
        self.0
            .iter()
            .filter(move |(v, _)| v.vertex == k)
            .map(|&(v, e)| (v.at, e))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    pub fn pow(&self, n: i32) -> Monomial {
        if n == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|&(v, e)| (v, e * n)).collect())
    }

    pub fn inv(&self) -> Monomial {
        self.pow(-1)
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        self.mul(&other.inv())
    }

    /// Multiplies every spectral point by `eps^n`.
    pub fn shift(&self, n: i32) -> Monomial {
        Monomial(
            self.0
                .iter()
                .map(|&(v, e)| {
                    (
                        Var {
                            vertex: v.vertex,
                            at: v.at.shift(n),
                        },
                        e,
                    )
                })
                .collect(),
        )
    }

    /// Moves every factor into `orbit`. The caller guarantees the monomial
    /// lives in a single orbit.
    pub fn into_orbit(&self, orbit: u32) -> Monomial {
        Monomial(
            self.0
                .iter()
                .map(|&(v, e)| {
                    (
                        Var {
                            vertex: v.vertex,
                            at: Spectral::new(orbit, v.at.step),
                        },
                        e,
                    )
                })
                .collect(),
        )
    }

    /// The image under `Y_{k,a} -> y_k`, as an exponent vector of length `rank`.
    pub fn weight(&self, rank: usize) -> Vec<i32> {
        let mut w = vec![0; rank];
        for &(v, e) in &self.0 {
            w[v.vertex - 1] += e;
        }
        w
    }

    /// Renders `Y[k,n]^e` atoms separated by spaces, `Y[k,o:n]^e` when
    /// `show_orbits` is set, and `1` for the empty monomial.
    pub fn render(&self, show_orbits: bool) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        let mut s = String::new();
        for (i, &(v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                s.push(' ');
            }
            if show_orbits {
                s.push_str(&format!("Y[{},{}:{}]", v.vertex, v.at.orbit, v.at.step));
            } else {
                s.push_str(&format!("Y[{},{}]", v.vertex, v.at.step));
            }
            if e != 1 {
                s.push_str(&format!("^{e}"));
            }
        }
        s
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(self.orbits().len() > 1))
    }
}

impl FromStr for Monomial {
    type Err = Error;

    /// Inverse of [`Monomial::render`]; atoms without an orbit go to orbit 0.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" || s.is_empty() {
            return Ok(Monomial::one());
        }
        let bad = |atom: &str| Error::Parse(format!("bad monomial atom `{atom}`"));
        let mut factors = Vec::new();
        for atom in s.split_whitespace() {
            let body = atom.strip_prefix("Y[").ok_or_else(|| bad(atom))?;
            let (inner, rest) = body.split_once(']').ok_or_else(|| bad(atom))?;
            let exp: i32 = match rest {
                "" => 1,
                r => r
                    .strip_prefix('^')
                    .and_then(|x| x.parse().ok())
                    .ok_or_else(|| bad(atom))?,
            };
            let (k, point) = inner.split_once(',').ok_or_else(|| bad(atom))?;
            let vertex: usize = k.trim().parse().map_err(|_| bad(atom))?;
            let (orbit, step) = match point.split_once(':') {
                Some((o, n)) => (
                    o.trim().parse().map_err(|_| bad(atom))?,
                    n.trim().parse().map_err(|_| bad(atom))?,
                ),
                None => (0, point.trim().parse().map_err(|_| bad(atom))?),
            };
            factors.push((Var::new(vertex, orbit, step), exp));
        }
        Ok(Monomial::from_factors(factors))
    }
}

/// An l-dominant monomial: all exponents positive. Equivalent to a tuple of
/// Drinfeld polynomials with roots on the spectral lattice.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DominantMonomial(Monomial);

impl DominantMonomial {
    pub fn new(m: Monomial) -> Result<Self> {
        if m.is_dominant() {
            Ok(Self(m))
        } else {
            Err(Error::NotDominant(m.to_string()))
        }
    }

    pub fn trivial() -> Self {
        Self(Monomial::one())
    }

    pub fn fundamental(vertex: usize, at: Spectral) -> Self {
        Self(Monomial::y(vertex, at))
    }

    pub fn monomial(&self) -> &Monomial {
        &self.0
    }

    pub fn into_monomial(self) -> Monomial {
        self.0
    }

    pub fn check_vertices(&self, d: &DynkinDiagram) -> Result<()> {
        self.0
            .factors()
            .iter()
            .try_for_each(|(v, _)| d.check_vertex(v.vertex))
    }
}

impl TryFrom<Monomial> for DominantMonomial {
    type Error = Error;
    fn try_from(m: Monomial) -> Result<Self> {
        Self::new(m)
    }
}

impl fmt::Display for DominantMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `A_{k,a} = Y_{k,a eps} Y_{k,a eps^-1} prod_{l ~ k} Y_{l,a}^-1`.
pub fn a_monomial(d: &DynkinDiagram, k: usize, a: Spectral) -> Result<Monomial> {
    d.check_vertex(k)?;
    Ok(a_unchecked(d, k, a))
}

pub(crate) fn a_unchecked(d: &DynkinDiagram, k: usize, a: Spectral) -> Monomial {
    let mut f = vec![
        (Var { vertex: k, at: a.shift(1) }, 1),
        (Var { vertex: k, at: a.shift(-1) }, 1),
    ];
    f.extend(d.neighbors(k).iter().map(|&l| (Var { vertex: l, at: a }, -1)));
    Monomial::from_factors(f)
}

/// `prod A_{k,a}^-v_{k,a}`.
pub fn a_inverse_product(d: &DynkinDiagram, v: &ExponentMap) -> Monomial {
    let mut acc = ExponentMap::new();
    for (&var, &n) in v {
        if n == 0 {
            continue;
        }
        for &(w, e) in a_unchecked(d, var.vertex, var.at).factors() {
            *acc.entry(w).or_insert(0) -= n * e;
        }
    }
    Monomial::from_map(acc)
}

/// Solves `num = den * prod A_{k,a}^-v_{k,a}` for a nonnegative `v`.
///
/// Per orbit, the exponent of `Y_{k,n}` in `num/den` equals
/// `-v_{k,n-1} - v_{k,n+1} + sum_{l~k} v_{l,n}`, which is solved upward in `n`
/// starting from zero below the support. The candidate is accepted only if it
/// is nonnegative and recomposes to `num` exactly.
pub fn factor_ratio(d: &DynkinDiagram, num: &Monomial, den: &Monomial) -> Option<ExponentMap> {
    let ratio = num.div(den);
    if ratio.is_one() {
        return Some(ExponentMap::new());
    }
    let rank = d.rank();
    let mut v = ExponentMap::new();
    for orbit in ratio.orbits() {
        let steps: Vec<i32> = ratio
            .factors()
            .iter()
            .filter(|(w, _)| w.at.orbit == orbit)
            .map(|(w, _)| w.at.step)
            .collect();
        let lo = *steps.iter().min()?;
        let hi = *steps.iter().max()?;
        // layers[i][k-1] = v_{k, lo + i}; v vanishes at steps <= lo
        let width = (hi - lo + 2) as usize;
        let mut layers = vec![vec![0i64; rank]; width];
        for n in lo..=hi {
            let i = (n - lo) as usize;
            for k in 1..=rank {
                let e = ratio.exponent(Var::new(k, orbit, n)) as i64;
                let below = if i == 0 { 0 } else { layers[i - 1][k - 1] };
                let side: i64 = d.neighbors(k).iter().map(|&l| layers[i][l - 1]).sum();
                let up = -e - below + side;
                if up < 0 {
                    return None;
                }
                layers[i + 1][k - 1] = up;
            }
        }
        for (i, layer) in layers.iter().enumerate() {
            for (k0, &x) in layer.iter().enumerate() {
                if x != 0 {
                    let x = i32::try_from(x).ok()?;
                    v.insert(Var::new(k0 + 1, orbit, lo + i as i32), x);
                }
            }
        }
    }
    if den.mul(&a_inverse_product(d, &v)) == *num {
        Some(v)
    } else {
        None
    }
}

/// `m <= m2` iff `m = m2 * prod A^-v` with `v >= 0`.
pub fn leq(d: &DynkinDiagram, m: &Monomial, m2: &Monomial) -> bool {
    factor_ratio(d, m, m2).is_some()
}

/// Exponent data of a monomial `m` below the highest monomial `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Uvw {
    /// exponents of `m`
    pub u: ExponentMap,
    /// `m = p * prod A^-v`
    pub v: ExponentMap,
    /// exponents of `p`
    pub w: ExponentMap,
}

pub fn uvw(d: &DynkinDiagram, m: &Monomial, p: &DominantMonomial) -> Result<Uvw> {
    let v = factor_ratio(d, m, p.monomial()).ok_or_else(|| Error::NotComparable {
        lower: m.to_string(),
        upper: p.to_string(),
    })?;
    Ok(Uvw {
        u: m.to_map(),
        v,
        w: p.monomial().to_map(),
    })
}

/// `sum_{k,a} v1_{k,a} u2_{k,a eps^-1} + w1_{k,a eps} v2_{k,a}`.
pub fn pairing(v1: &ExponentMap, w1: &ExponentMap, u2: &ExponentMap, v2: &ExponentMap) -> i64 {
    let first: i64 = v1
        .iter()
        .map(|(var, &x)| {
            let key = Var {
                vertex: var.vertex,
                at: var.at.shift(-1),
            };
            x as i64 * u2.get(&key).copied().unwrap_or(0) as i64
        })
        .sum();
    let second: i64 = v2
        .iter()
        .map(|(var, &x)| {
            let key = Var {
                vertex: var.vertex,
                at: var.at.shift(1),
            };
            x as i64 * w1.get(&key).copied().unwrap_or(0) as i64
        })
        .sum();
    first + second
}

pub fn d_pair(
    d: &DynkinDiagram,
    m1: &Monomial,
    p1: &DominantMonomial,
    m2: &Monomial,
    p2: &DominantMonomial,
) -> Result<i64> {
    let a = uvw(d, m1, p1)?;
    let b = uvw(d, m2, p2)?;
    Ok(pairing(&a.v, &a.w, &b.u, &b.v))
}

pub fn d_self(d: &DynkinDiagram, m: &Monomial, p: &DominantMonomial) -> Result<i64> {
    let x = uvw(d, m, p)?;
    Ok(pairing(&x.v, &x.w, &x.u, &x.v))
}
