//! Restriction of standard modules to the finite-type quantum group: the
//! t-analogue of the ordinary character, weight multiplicities and branching.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::cartan::{DynkinDiagram, HeightFunction};
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::tlaurent::TPoly;
use crate::ymonomial::{factor_ratio, DominantMonomial, Monomial, Var};

/// `sum_k w_k Lambda_k`, stored in vertex order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DominantWeight(Vec<u32>);

impl DominantWeight {
    pub fn new(coords: Vec<u32>) -> Self {
        Self(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Self(vec![0; rank])
    }

    /// `Lambda_k`.
    pub fn fundamental(rank: usize, k: usize) -> Self {
        let mut w = vec![0; rank];
        w[k - 1] = 1;
        Self(w)
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn check(&self, d: &DynkinDiagram) -> Result<()> {
        if self.rank() != d.rank() {
            return Err(Error::Parse(format!(
                "weight has {} coordinates, {d} needs {}",
                self.rank(),
                d.rank()
            )));
        }
        Ok(())
    }

    /// Readable form such as `2L1 + L3`, or `0`.
    pub fn lambda_notation(&self) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| match c {
                1 => format!("L{}", i + 1),
                _ => format!("{c}L{}", i + 1),
            })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    fn as_exponents(&self) -> Vec<i32> {
        self.0.iter().map(|&x| x as i32).collect()
    }

    fn from_exponents(e: &[i32]) -> Option<Self> {
        e.iter()
            .map(|&x| u32::try_from(x).ok())
            .collect::<Option<Vec<_>>>()
            .map(Self)
    }
}

impl FromStr for DominantWeight {
    type Err = Error;

    /// Comma separated coefficients, `"0,1,0,0"`.
    fn from_str(s: &str) -> Result<Self> {
        s.split(',')
            .map(|x| {
                x.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad weight coordinate `{x}` in `{s}`")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// A Laurent polynomial in `y_k` with coefficients in `Z[t, t^-1]`, keyed by
/// exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrdinaryTCharacter {
    rank: usize,
    terms: BTreeMap<Vec<i32>, TPoly>,
    /// `sum_a v_{k,a}` for each weight, the position below the top in the
    /// root lattice
    depths: BTreeMap<Vec<i32>, Vec<i32>>,
}

impl OrdinaryTCharacter {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i32>, TPoly> {
        &self.terms
    }

    pub fn coeff(&self, weight: &[i32]) -> TPoly {
        self.terms.get(weight).cloned().unwrap_or_default()
    }

    pub fn coeff_dominant(&self, w: &DominantWeight) -> TPoly {
        self.coeff(&w.as_exponents())
    }

    /// Dominant weights present, from the top down in root-lattice height.
    pub fn dominant_weights(&self) -> Vec<DominantWeight> {
        let mut out: Vec<(i32, DominantWeight)> = self
            .terms
            .keys()
            .filter_map(|e| {
                let w = DominantWeight::from_exponents(e)?;
                Some((self.depths[e].iter().sum(), w))
            })
            .collect();
        out.sort();
        out.into_iter().map(|(_, w)| w).collect()
    }

    /// Value at `t = 1` summed over all weights.
    pub fn dimension(&self) -> i64 {
        self.terms.values().map(TPoly::eval_one).sum()
    }
}

/// `prod_k Y_{k, eps^{m(k)}}^{w_k}` in orbit 0.
pub fn canonical_p(w: &DominantWeight, h: &HeightFunction) -> DominantMonomial {
    let m = Monomial::from_factors(
        w.0.iter()
            .enumerate()
            .filter(|(_, &x)| x > 0)
            .map(|(i, &x)| (Var::new(i + 1, 0, h.get(i + 1)), x as i32)),
    );
    DominantMonomial::new(m).expect("positive exponents")
}

/// The modified character of `M_P` with every `Y_{k,a}` sent to `y_k`.
pub fn chi_t_ordinary(engine: &Engine, p: &DominantMonomial) -> Result<OrdinaryTCharacter> {
    let d = engine.diagram();
    let rank = d.rank();
    let chi = engine.standard(p)?.tilde()?;
    let mut terms: BTreeMap<Vec<i32>, TPoly> = BTreeMap::new();
    let mut depths = BTreeMap::new();
    for (m, c) in chi.terms() {
        let w = m.weight(rank);
        *terms.entry(w.clone()).or_default() += c;
        depths.entry(w).or_insert_with(|| {
            let v = factor_ratio(d, m, p.monomial()).expect("validated character");
            let mut n = vec![0; rank];
            for (var, x) in v {
                n[var.vertex - 1] += x;
            }
            n
        });
    }
    terms.retain(|_, c| !c.is_zero());
    depths.retain(|w, _| terms.contains_key(w));
    Ok(OrdinaryTCharacter {
        rank,
        terms,
        depths,
    })
}

/// `c_{w2,w}(0)`: the dimension of the `w2` weight space of `L_w`.
pub fn weight_multiplicity(
    engine: &Engine,
    h: &HeightFunction,
    w: &DominantWeight,
    w2: &DominantWeight,
) -> Result<i64> {
    w.check(engine.diagram())?;
    w2.check(engine.diagram())?;
    Ok(chi_t_ordinary(engine, &canonical_p(w, h))?
        .coeff_dominant(w2)
        .constant_term())
}

/// Multiplicities `Z_{w',w}` of the simple modules `L_{w'}` in the
/// restriction of the standard module `M_P` with `P` canonical for `w`.
pub fn branching(
    engine: &Engine,
    h: &HeightFunction,
    w: &DominantWeight,
) -> Result<BTreeMap<DominantWeight, i64>> {
    w.check(engine.diagram())?;
    let top = chi_t_ordinary(engine, &canonical_p(w, h))?;
    let order = top.dominant_weights();
    let mut residual: BTreeMap<DominantWeight, i64> = order
        .iter()
        .map(|x| (x.clone(), top.coeff_dominant(x).eval_one()))
        .collect();
    let mut out = BTreeMap::new();
    for w1 in &order {
        let z = residual[w1];
        if z < 0 {
            return Err(Error::Inconsistent(format!(
                "negative branching multiplicity {z} at {w1}"
            )));
        }
        if z == 0 {
            continue;
        }
        let sub = chi_t_ordinary(engine, &canonical_p(w1, h))?;
        if sub.coeff_dominant(w1).constant_term() != 1 {
            return Err(Error::Inconsistent(format!(
                "top weight {w1} of its own standard module is not simple"
            )));
        }
        for w2 in sub.dominant_weights() {
            let c0 = sub.coeff_dominant(&w2).constant_term();
            if c0 == 0 {
                continue;
            }
            let slot = residual.get_mut(&w2).ok_or_else(|| {
                Error::Inconsistent(format!("weight {w2} of L_{w1} missing from M_{w}"))
            })?;
            *slot -= z * c0;
        }
        out.insert(w1.clone(), z);
    }
    if let Some((x, r)) = residual.iter().find(|(_, &r)| r != 0) {
        return Err(Error::Inconsistent(format!(
            "branching leaves residual {r} at {x}"
        )));
    }
    Ok(out)
}
