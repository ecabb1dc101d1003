//! Step 2: characters of standard modules as ordered tensor products of
//! l-fundamental modules.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cartan::DynkinDiagram;
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::qchar::QCharacter;
use crate::tlaurent::TPoly;
use crate::ymonomial::{factor_ratio, pairing, DominantMonomial, ExponentMap, Monomial, Spectral, Var};

/// Fundamental factors `(vertex, step)` sharing one orbit, steps nonincreasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitGroup {
    pub orbit: u32,
    pub factors: Vec<(usize, i32)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardModuleSpec {
    pub groups: Vec<OrbitGroup>,
}

/// One unit per exponent of `p`, grouped by orbit; within an orbit sorted by
/// step descending, equal steps by ascending vertex.
pub fn normal_form(p: &DominantMonomial) -> StandardModuleSpec {
    let mut by_orbit: BTreeMap<u32, Vec<(usize, i32)>> = BTreeMap::new();
    for &(v, e) in p.monomial().factors() {
        let group = by_orbit.entry(v.at.orbit).or_default();
        group.extend(std::iter::repeat_n((v.vertex, v.at.step), e as usize));
    }
    let groups = by_orbit
        .into_iter()
        .map(|(orbit, mut factors)| {
            factors.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
            OrbitGroup { orbit, factors }
        })
        .collect();
    StandardModuleSpec { groups }
}

struct Term<'a> {
    monomial: &'a Monomial,
    coeff: &'a TPoly,
    v: ExponentMap,
}

fn with_v(chi: &QCharacter) -> Result<Vec<Term<'_>>> {
    chi.terms()
        .iter()
        .map(|(m, c)| {
            let v = factor_ratio(chi.diagram(), m, chi.highest().monomial()).ok_or_else(|| {
                Error::NotComparable {
                    lower: m.to_string(),
                    upper: chi.highest().to_string(),
                }
            })?;
            Ok(Term {
                monomial: m,
                coeff: c,
                v,
            })
        })
        .collect()
}

/// `chi(M_left (x) M_right)` where `left` already stands for the earlier
/// factors. Every pair contributes `t^{d(right; left) - d(left; right)}`; the
/// pairing is additive in the data of the earlier factors, so folding over
/// the factor list sums it over all strict pairs.
fn twisted_mul(left: &QCharacter, right: &QCharacter) -> Result<QCharacter> {
    let lw = left.highest().monomial().to_map();
    let rw = right.highest().monomial().to_map();
    let lt = with_v(left)?;
    let rt = with_v(right)?;
    let mut terms: BTreeMap<Monomial, TPoly> = BTreeMap::new();
    for a in &lt {
        let au = a.monomial.to_map();
        for b in &rt {
            let bu = b.monomial.to_map();
            let e = pairing(&b.v, &rw, &au, &a.v) - pairing(&a.v, &lw, &bu, &b.v);
            let c = (a.coeff * b.coeff).shift(e as i32);
            *terms.entry(a.monomial.mul(b.monomial)).or_default() += &c;
        }
    }
    let highest = DominantMonomial::new(left.highest().monomial().mul(right.highest().monomial()))
        .expect("product of dominant monomials");
    Ok(QCharacter::from_parts(left.diagram().clone(), highest, terms))
}

fn fundamental_point(chi: &QCharacter) -> Result<(usize, Spectral)> {
    match chi.highest().monomial().factors() {
        [(v, 1)] => Ok((v.vertex, v.at)),
        _ => Err(Error::Precondition(format!(
            "{} is not an l-fundamental highest monomial",
            chi.highest()
        ))),
    }
}

/// Character of `L_1 (x) L_2 (x) ...` for l-fundamental factors in a single
/// orbit with nonincreasing steps.
pub fn twisted_product(factors: &[QCharacter]) -> Result<QCharacter> {
    let Some(first) = factors.first() else {
        return Err(Error::Precondition("empty factor list".into()));
    };
    let mut orbit = None;
    let mut last_step = i32::MAX;
    for f in factors {
        let (_, at) = fundamental_point(f)?;
        if *orbit.get_or_insert(at.orbit) != at.orbit || f.orbits().len() > 1 {
            return Err(Error::OrbitMismatch);
        }
        if at.step > last_step {
            return Err(Error::Ordering);
        }
        last_step = at.step;
    }
    factors[1..]
        .iter()
        .try_fold(first.clone(), |acc, f| twisted_mul(&acc, f))
}

/// Plain product of characters living in pairwise distinct orbits.
pub fn cross_orbit_product(d: &DynkinDiagram, chis: &[QCharacter]) -> Result<QCharacter> {
    let mut used = std::collections::BTreeSet::new();
    for c in chis {
        for o in c.orbits() {
            if !used.insert(o) {
                return Err(Error::DuplicateOrbit(o));
            }
        }
    }
    Ok(chis
        .iter()
        .fold(QCharacter::trivial(d.clone()), |acc, c| acc.mul_plain(c)))
}

pub fn standard_qchar(engine: &Engine, p: &DominantMonomial) -> Result<QCharacter> {
    p.check_vertices(engine.diagram())?;
    let spec = normal_form(p);
    let groups = spec
        .groups
        .iter()
        .map(|g| {
            let factors = g
                .factors
                .iter()
                .map(|&(k, n)| engine.fundamental(k, Spectral::new(g.orbit, n)))
                .collect::<Result<Vec<_>>>()?;
            twisted_product(&factors)
        })
        .collect::<Result<Vec<_>>>()?;
    cross_orbit_product(engine.diagram(), &groups)
}

/// One entry of the JSON form of a Drinfeld polynomial: `mult` copies of the
/// linear factor of the l-fundamental module at `node` and point
/// `s_orbit * eps^step`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DrinfeldFactor {
    pub node: usize,
    #[serde(default)]
    pub orbit: u32,
    pub step: i32,
    #[serde(default = "one")]
    pub mult: u32,
}

fn one() -> u32 {
    1
}

/// A Drinfeld polynomial in its compact text form: atoms `k:n^m` separated by
/// spaces, with an `o/` orbit prefix when needed, e.g. `2:1^2 1:0`.
/// `1` (or the empty string) is the trivial module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DrinfeldSpec(pub DominantMonomial);

impl DrinfeldSpec {
    pub fn from_factors(factors: &[DrinfeldFactor]) -> Result<Self> {
        let mut f = Vec::new();
        for x in factors {
            if x.mult == 0 {
                return Err(Error::Parse(format!("zero multiplicity at node {}", x.node)));
            }
            f.push((Var::new(x.node, x.orbit, x.step), x.mult as i32));
        }
        Ok(Self(DominantMonomial::new(Monomial::from_factors(f))?))
    }

    pub fn factors(&self) -> Vec<DrinfeldFactor> {
        self.0
            .monomial()
            .factors()
            .iter()
            .map(|&(v, e)| DrinfeldFactor {
                node: v.vertex,
                orbit: v.at.orbit,
                step: v.at.step,
                mult: e as u32,
            })
            .collect()
    }

    /// Accepts either the text form or a JSON array of factors.
    pub fn parse_any(s: &str) -> Result<Self> {
        if s.trim_start().starts_with('[') {
            let f: Vec<DrinfeldFactor> =
                serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
            Self::from_factors(&f)
        } else {
            s.parse()
        }
    }
}

impl FromStr for DrinfeldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(Self(DominantMonomial::trivial()));
        }
        let bad = |atom: &str| Error::Parse(format!("bad Drinfeld atom `{atom}`, expected `[o/]k:n[^m]`"));
        let mut factors = Vec::new();
        for atom in s.split_whitespace() {
            let (orbit, rest) = match atom.split_once('/') {
                Some((o, r)) => (o.parse::<u32>().map_err(|_| bad(atom))?, r),
                None => (0, atom),
            };
            let (node, rest) = rest.split_once(':').ok_or_else(|| bad(atom))?;
            let (step, mult) = match rest.split_once('^') {
                Some((n, m)) => (n, m.parse::<u32>().map_err(|_| bad(atom))?),
                None => (rest, 1),
            };
            factors.push(DrinfeldFactor {
                node: node.parse().map_err(|_| bad(atom))?,
                orbit,
                step: step.parse().map_err(|_| bad(atom))?,
                mult,
            });
        }
        Self::from_factors(&factors)
    }
}

impl fmt::Display for DrinfeldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors = self.factors();
        if factors.is_empty() {
            return f.write_str("1");
        }
        let show_orbit = self.0.monomial().orbits().iter().any(|&o| o != 0);
        for (i, x) in factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if show_orbit {
                write!(f, "{}/", x.orbit)?;
            }
            write!(f, "{}:{}", x.node, x.step)?;
            if x.mult != 1 {
                write!(f, "^{}", x.mult)?;
            }
        }
        Ok(())
    }
}
