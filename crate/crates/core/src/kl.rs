//! Step 3: the Lusztig bar-recursion over the poset of l-dominant monomials,
//! giving multiplicities of simple modules in standard modules.

use std::collections::{BTreeMap, BTreeSet};

use crate::cartan::DynkinDiagram;
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::qchar::QCharacter;
use crate::tlaurent::TPoly;
use crate::ymonomial::{factor_ratio, DominantMonomial, Monomial};

pub type PolyMatrix = Vec<Vec<TPoly>>;

/// The l-dominant monomials reachable from `P` through standard characters,
/// listed along a linear extension of `<=`: smaller elements first, `P` last.
/// Entry `i` carries `chi_{q,t}(M_{elements[i]})`.
#[derive(Debug, Clone)]
pub struct DominantPoset {
    diagram: DynkinDiagram,
    elements: Vec<DominantMonomial>,
    characters: Vec<QCharacter>,
}

impl DominantPoset {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[DominantMonomial] {
        &self.elements
    }

    pub fn top(&self) -> usize {
        self.elements.len() - 1
    }

    pub fn index_of(&self, q: &DominantMonomial) -> Option<usize> {
        self.elements.iter().position(|x| x == q)
    }

    pub fn character(&self, i: usize) -> &QCharacter {
        &self.characters[i]
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        factor_ratio(
            &self.diagram,
            self.elements[i].monomial(),
            self.elements[j].monomial(),
        )
        .is_some()
    }
}

fn depth_below(d: &DynkinDiagram, m: &Monomial, top: &Monomial) -> Result<u32> {
    factor_ratio(d, m, top)
        .map(|v| v.values().map(|&x| x as u32).sum())
        .ok_or_else(|| Error::NotComparable {
            lower: m.to_string(),
            upper: top.to_string(),
        })
}

/// Smallest set containing `p` and every l-dominant monomial of
/// `chi_{q,t}(M_Q)` for each `Q` in the set.
pub fn dominant_closure(engine: &Engine, p: &DominantMonomial) -> Result<DominantPoset> {
    let d = engine.diagram();
    p.check_vertices(d)?;
    let mut found: BTreeMap<DominantMonomial, QCharacter> = BTreeMap::new();
    let mut pending = vec![p.clone()];
    let mut seen = BTreeSet::from([p.clone()]);
    let mut total = 0usize;
    while let Some(q) = pending.pop() {
        let chi = engine.standard(&q)?;
        total += chi.len();
        if total > engine.max_monomials() {
            return Err(Error::LimitExceeded {
                limit: engine.max_monomials(),
            });
        }
        for r in chi.extra_dominant() {
            if seen.insert(r.clone()) {
                pending.push(r);
            }
        }
        found.insert(q, chi);
    }
    let mut keyed = found
        .into_iter()
        .map(|(q, chi)| Ok((depth_below(d, q.monomial(), p.monomial())?, q, chi)))
        .collect::<Result<Vec<_>>>()?;
    // deeper first; ties are incomparable
    keyed.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(&b.1)));
    let (elements, characters) = keyed.into_iter().map(|(_, q, c)| (q, c)).unzip();
    Ok(DominantPoset {
        diagram: d.clone(),
        elements,
        characters,
    })
}

/// `c[Q][P]` is the coefficient of `m_Q` in `chi_{q,t}(M_P)`.
pub fn c_matrix(poset: &DominantPoset) -> PolyMatrix {
    let n = poset.len();
    (0..n)
        .map(|q| {
            (0..n)
                .map(|p| poset.character(p).coeff(poset.elements[q].monomial()))
                .collect()
        })
        .collect()
}

fn identity(n: usize) -> PolyMatrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { TPoly::one() } else { TPoly::zero() })
                .collect()
        })
        .collect()
}

pub fn mat_mul(a: &PolyMatrix, b: &PolyMatrix) -> PolyMatrix {
    let n = a.len();
    let mut out = vec![vec![TPoly::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += &(&a[i][k] * &b[k][j]);
                }
            }
        }
    }
    out
}

/// Entrywise `t -> t^-1`.
pub fn mat_bar(a: &PolyMatrix) -> PolyMatrix {
    a.iter().map(|r| r.iter().map(TPoly::bar).collect()).collect()
}

fn check_unitriangular(c: &PolyMatrix) -> Result<()> {
    let n = c.len();
    for (i, row) in c.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Precondition("matrix is not square".into()));
        }
        if !row[i].is_one() || row[..i].iter().any(|x| !x.is_zero()) {
            return Err(Error::Precondition(
                "matrix is not upper unitriangular".into(),
            ));
        }
    }
    Ok(())
}

/// Inverse of an upper unitriangular matrix by back substitution.
#[allow(clippy::needless_range_loop)]
pub fn inverse(c: &PolyMatrix) -> Result<PolyMatrix> {
    check_unitriangular(c)?;
    let n = c.len();
    let mut inv = identity(n);
    for j in 0..n {
        for i in (0..j).rev() {
            let mut s = TPoly::zero();
            for k in i + 1..=j {
                if !c[i][k].is_zero() && !inv[k][j].is_zero() {
                    s += &(&c[i][k] * &inv[k][j]);
                }
            }
            inv[i][j] = -s;
        }
    }
    Ok(inv)
}

/// `u[R][P] = sum_Q c^{RQ}(t^-1) c_{QP}(t)`.
pub fn u_matrix(c: &PolyMatrix) -> Result<PolyMatrix> {
    Ok(mat_mul(&mat_bar(&inverse(c)?), c))
}

/// The unique `Z` with unit diagonal, off-diagonal entries in `t^-1 Z[t^-1]`
/// and `Z_RP = sum_{R<=Q<=P} bar(Z_RQ) u_QP`.
pub fn kl_solve(u: &PolyMatrix) -> Result<PolyMatrix> {
    check_unitriangular(u)?;
    let n = u.len();
    let mut z = identity(n);
    for p in 0..n {
        for r in (0..p).rev() {
            let mut g = TPoly::zero();
            for q in r..p {
                if !z[r][q].is_zero() && !u[q][p].is_zero() {
                    g += &(&z[r][q].bar() * &u[q][p]);
                }
            }
            if g.constant_term() != 0 || g.bar() != -&g {
                return Err(Error::Inconsistent(format!(
                    "bar recursion at ({r},{p}) is not solvable: {g}"
                )));
            }
            z[r][p] = g.negative_part();
        }
    }
    Ok(z)
}

/// All matrices of the recursion for one closure.
#[derive(Debug, Clone)]
pub struct KLTables {
    poset: DominantPoset,
    c: PolyMatrix,
    c_inv: PolyMatrix,
    u: PolyMatrix,
    z: PolyMatrix,
}

impl KLTables {
    pub fn build(engine: &Engine, p: &DominantMonomial) -> Result<Self> {
        Self::from_poset(dominant_closure(engine, p)?)
    }

    pub fn from_poset(poset: DominantPoset) -> Result<Self> {
        let c = c_matrix(&poset);
        let c_inv = inverse(&c)?;
        let u = mat_mul(&mat_bar(&c_inv), &c);
        let z = kl_solve(&u)?;
        Ok(Self {
            poset,
            c,
            c_inv,
            u,
            z,
        })
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.poset.diagram
    }

    pub fn poset(&self) -> &DominantPoset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn top(&self) -> usize {
        self.poset.top()
    }

    pub fn element(&self, i: usize) -> &DominantMonomial {
        &self.poset.elements[i]
    }

    pub fn c(&self) -> &PolyMatrix {
        &self.c
    }

    pub fn c_inv(&self) -> &PolyMatrix {
        &self.c_inv
    }

    pub fn u(&self) -> &PolyMatrix {
        &self.u
    }

    pub fn z(&self) -> &PolyMatrix {
        &self.z
    }

    /// `Z_{QP}` for the element `q`, zero outside the closure.
    pub fn z_of(&self, q: &DominantMonomial) -> TPoly {
        self.poset
            .index_of(q)
            .map(|i| self.z[i][self.top()].clone())
            .unwrap_or_default()
    }

    /// `(Q, Z_{QP})` for every `Q`, deepest first.
    pub fn column(&self, p: usize) -> impl Iterator<Item = (usize, &TPoly)> {
        self.z.iter().enumerate().map(move |(q, row)| (q, &row[p]))
    }
}

/// `[M_P : L_Q] = Z_{QP}(1)`; zero when `Q` is not in the closure of `P`.
pub fn multiplicity(engine: &Engine, p: &DominantMonomial, q: &DominantMonomial) -> Result<i64> {
    q.check_vertices(engine.diagram())?;
    Ok(KLTables::build(engine, p)?.z_of(q).eval_one())
}

/// `chi_q(L_Q)` at `t = 1`, from `[M_P] = sum_R Z_{RP}(1) [L_R]` inverted over
/// the closure of `Q`.
pub fn simple_qchar_t1(engine: &Engine, q: &DominantMonomial) -> Result<QCharacter> {
    let tables = KLTables::build(engine, q)?;
    let n = tables.len();
    let top = tables.top();
    // column `top` of the inverse of the unitriangular integer matrix Z(1)
    let z1: Vec<Vec<i64>> = tables
        .z
        .iter()
        .map(|r| r.iter().map(TPoly::eval_one).collect())
        .collect();
    let mut x = vec![0i64; n];
    x[top] = 1;
    for i in (0..top).rev() {
        x[i] = -(i + 1..=top).map(|k| z1[i][k] * x[k]).sum::<i64>();
    }
    let mut terms: BTreeMap<Monomial, TPoly> = BTreeMap::new();
    for (r, &coef) in x.iter().enumerate() {
        if coef == 0 {
            continue;
        }
        for (m, c) in tables.poset.character(r).terms() {
            *terms.entry(m.clone()).or_default() += &TPoly::constant(coef * c.eval_one());
        }
    }
    let chi = QCharacter::from_parts(engine.diagram().clone(), q.clone(), terms);
    chi.validate()?;
    Ok(chi)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn engine(d: &str) -> Engine {
        Engine::new(d.parse().unwrap())
    }

    fn dom(s: &str) -> DominantMonomial {
        DominantMonomial::new(s.parse().unwrap()).unwrap()
    }

    fn p(terms: &[(i32, i64)]) -> TPoly {
        TPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn closure_examples() {
        let e = engine("A1");
        let c = dominant_closure(&e, &dom("Y[1,0] Y[1,2]")).unwrap();
        assert_eq!(c.elements(), &[DominantMonomial::trivial(), dom("Y[1,0] Y[1,2]")]);
        assert!(c.leq(0, 1) && !c.leq(1, 0));
        assert_eq!(dominant_closure(&e, &dom("Y[1,0]^2")).unwrap().len(), 1);
        let d4 = engine("D4");
        assert_eq!(dominant_closure(&d4, &dom("Y[2,0]")).unwrap().len(), 1);
    }

    #[test]
    fn a1_pair_tables() {
        let e = engine("A1");
        let t = KLTables::build(&e, &dom("Y[1,0] Y[1,2]")).unwrap();
        assert_eq!(t.c()[0][1], TPoly::t_pow(-1));
        assert!(t.c()[1][0].is_zero());
        assert_eq!(t.u()[0][1], p(&[(-1, 1), (1, -1)]));
        assert_eq!(t.z()[0][1], TPoly::t_pow(-1));
        assert_eq!(multiplicity(&e, &dom("Y[1,0] Y[1,2]"), &DominantMonomial::trivial()).unwrap(), 1);
        assert_eq!(multiplicity(&e, &dom("Y[1,0] Y[1,2]"), &dom("Y[1,0] Y[1,2]")).unwrap(), 1);
        assert_eq!(multiplicity(&e, &dom("Y[1,0]^2"), &DominantMonomial::trivial()).unwrap(), 0);
    }

    #[test]
    fn generic_pair_is_simple() {
        let e = engine("A1");
        let t = KLTables::build(&e, &dom("Y[1,0] Y[1,4]")).unwrap();
        assert_eq!(t.len(), 1);
    }

    #[test]
    fn identity_inputs() {
        let id = identity(3);
        assert_eq!(u_matrix(&id).unwrap(), id);
        assert_eq!(kl_solve(&id).unwrap(), id);
        assert_eq!(inverse(&id).unwrap(), id);
    }

    #[test]
    fn rejects_non_triangular() {
        let mut m = identity(2);
        m[1][0] = TPoly::one();
        assert!(inverse(&m).is_err());
        let mut m = identity(2);
        m[0][1] = TPoly::one();
        assert!(matches!(kl_solve(&m), Err(Error::Inconsistent(_))));
    }

    #[test]
    fn simple_characters() {
        let e = engine("A1");
        let l = simple_qchar_t1(&e, &dom("Y[1,0] Y[1,2]")).unwrap();
        let expected: BTreeSet<Monomial> = ["Y[1,0] Y[1,2]", "Y[1,0] Y[1,4]^-1", "Y[1,2]^-1 Y[1,4]^-1"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        assert_eq!(l.terms().keys().cloned().collect::<BTreeSet<_>>(), expected);
        assert!(l.terms().values().all(TPoly::is_one));

        let triv = simple_qchar_t1(&e, &DominantMonomial::trivial()).unwrap();
        assert_eq!(triv, QCharacter::trivial("A1".parse().unwrap()));

        let d4 = engine("D4");
        let f = simple_qchar_t1(&d4, &dom("Y[2,0]")).unwrap();
        let g = d4.fundamental(2, crate::ymonomial::Spectral::new(0, 0)).unwrap().at_t1();
        assert_eq!(f, g);
    }
}
