//! Characters: finite sums of monomials with coefficients in `Z[t, t^-1]`.

use std::collections::{BTreeMap, BTreeSet};

use crate::cartan::DynkinDiagram;
use crate::error::{Error, Result};
use crate::tlaurent::TPoly;
use crate::ymonomial::{d_self, factor_ratio, DominantMonomial, Monomial};

/// A t-graded q-character together with its l-highest monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QCharacter {
    diagram: DynkinDiagram,
    highest: DominantMonomial,
    terms: BTreeMap<Monomial, TPoly>,
}

impl QCharacter {
    /// Builds a character without checking its invariants; see [`Self::validate`].
    pub fn from_parts(
        diagram: DynkinDiagram,
        highest: DominantMonomial,
        terms: BTreeMap<Monomial, TPoly>,
    ) -> Self {
        let terms = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Self {
            diagram,
            highest,
            terms,
        }
    }

    /// The character `1` of the trivial module.
    pub fn trivial(diagram: DynkinDiagram) -> Self {
        Self {
            diagram,
            highest: DominantMonomial::trivial(),
            terms: BTreeMap::from([(Monomial::one(), TPoly::one())]),
        }
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    pub fn highest(&self) -> &DominantMonomial {
        &self.highest
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, TPoly> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> TPoly {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn orbits(&self) -> BTreeSet<u32> {
        self.terms.keys().flat_map(|m| m.orbits()).collect()
    }

    /// Checks that the highest monomial has coefficient 1, that every monomial
    /// lies below it, and that all coefficients are nonnegative.
    pub fn validate(&self) -> Result<()> {
        if !self.coeff(self.highest.monomial()).is_one() {
            return Err(Error::Inconsistent(format!(
                "highest monomial {} does not have coefficient 1",
                self.highest
            )));
        }
        for (m, c) in &self.terms {
            if factor_ratio(&self.diagram, m, self.highest.monomial()).is_none() {
                return Err(Error::Inconsistent(format!(
                    "{m} is not below {}",
                    self.highest
                )));
            }
            if !c.has_nonnegative_coefficients() {
                return Err(Error::Inconsistent(format!(
                    "coefficient {c} of {m} has a negative entry"
                )));
            }
        }
        Ok(())
    }

    /// Multiplies every spectral point by `eps^n`.
    pub fn shift(&self, n: i32) -> Self {
        Self {
            diagram: self.diagram.clone(),
            highest: DominantMonomial::new(self.highest.monomial().shift(n))
                .expect("shift keeps dominance"),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.shift(n), c.clone()))
                .collect(),
        }
    }

    /// Moves a single-orbit character into `orbit`.
    pub fn into_orbit(&self, orbit: u32) -> Self {
        Self {
            diagram: self.diagram.clone(),
            highest: DominantMonomial::new(self.highest.monomial().into_orbit(orbit))
                .expect("relabelling keeps dominance"),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.into_orbit(orbit), c.clone()))
                .collect(),
        }
    }

    /// Specialization `t = 1`, stored with constant coefficients.
    pub fn at_t1(&self) -> Self {
        Self::from_parts(
            self.diagram.clone(),
            self.highest.clone(),
            self.terms
                .iter()
                .map(|(m, c)| (m.clone(), TPoly::constant(c.eval_one())))
                .collect(),
        )
    }

    /// Untwisted product; the highest monomials multiply.
    pub fn mul_plain(&self, other: &QCharacter) -> Self {
        let mut terms: BTreeMap<Monomial, TPoly> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                *terms.entry(m1.mul(m2)).or_default() += &(c1 * c2);
            }
        }
        let highest = DominantMonomial::new(self.highest.monomial().mul(other.highest.monomial()))
            .expect("product of dominant monomials");
        Self::from_parts(self.diagram.clone(), highest, terms)
    }

    pub fn add(&self, other: &QCharacter) -> Self {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            *terms.entry(m.clone()).or_default() += c;
        }
        Self::from_parts(self.diagram.clone(), self.highest.clone(), terms)
    }

    /// Total number of `A^-1` factors separating each monomial from the top.
    pub fn depth(&self, m: &Monomial) -> Result<u32> {
        factor_ratio(&self.diagram, m, self.highest.monomial())
            .map(|v| v.values().map(|&x| x as u32).sum())
            .ok_or_else(|| Error::NotComparable {
                lower: m.to_string(),
                upper: self.highest.to_string(),
            })
    }

    /// Terms sorted by depth below the highest monomial, then canonically.
    pub fn terms_by_depth(&self) -> Result<Vec<(u32, &Monomial, &TPoly)>> {
        let mut out = self
            .terms
            .iter()
            .map(|(m, c)| Ok((self.depth(m)?, m, c)))
            .collect::<Result<Vec<_>>>()?;
        out.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
        Ok(out)
    }

    /// The modified character: each coefficient `a_m(t)` becomes
    /// `t^{d(m, m_P)} a_m(t)`, which must be a polynomial in `t` with nonzero
    /// constant term.
    pub fn tilde(&self) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let d = d_self(&self.diagram, m, &self.highest)?;
            let shifted = c.shift(d as i32);
            if shifted.min_exponent() != Some(0) {
                return Err(Error::Inconsistent(format!(
                    "modified coefficient {shifted} of {m} is not a polynomial with nonzero constant term"
                )));
            }
            terms.insert(m.clone(), shifted);
        }
        Ok(Self::from_parts(self.diagram.clone(), self.highest.clone(), terms))
    }

    /// Inverse of [`Self::tilde`], without the postcondition check.
    pub(crate) fn untilde(&self) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let d = d_self(&self.diagram, m, &self.highest)?;
            terms.insert(m.clone(), c.shift(-(d as i32)));
        }
        Ok(Self::from_parts(self.diagram.clone(), self.highest.clone(), terms))
    }

    /// l-dominant monomials other than the highest one.
    pub fn extra_dominant(&self) -> Vec<DominantMonomial> {
        self.terms
            .keys()
            .filter(|m| m.is_dominant() && *m != self.highest.monomial())
            .map(|m| DominantMonomial::new(m.clone()).expect("checked dominant"))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a1_fundamental() -> QCharacter {
        let d: DynkinDiagram = "A1".parse().unwrap();
        let h = DominantMonomial::new("Y[1,0]".parse().unwrap()).unwrap();
        QCharacter::from_parts(
            d,
            h,
            BTreeMap::from([
                ("Y[1,0]".parse().unwrap(), TPoly::one()),
                ("Y[1,2]^-1".parse().unwrap(), TPoly::one()),
            ]),
        )
    }

    #[test]
    fn tilde_unchanged_on_a1_fundamental() {
        let c = a1_fundamental();
        assert_eq!(c.tilde().unwrap(), c);
    }

    #[test]
    fn tilde_of_empty_is_empty() {
        let d: DynkinDiagram = "A1".parse().unwrap();
        let c = QCharacter::from_parts(d, DominantMonomial::trivial(), BTreeMap::new());
        assert!(c.tilde().unwrap().is_empty());
    }

    #[test]
    fn tilde_rejects_bad_grading() {
        let mut c = a1_fundamental();
        c.terms.insert("Y[1,2]^-1".parse().unwrap(), TPoly::t_pow(1));
        assert!(matches!(c.tilde(), Err(Error::Inconsistent(_))));
    }

    #[test]
    fn validate_and_shift() {
        let c = a1_fundamental();
        c.validate().unwrap();
        let s = c.shift(3);
        s.validate().unwrap();
        assert_eq!(s.highest().monomial(), &"Y[1,3]".parse().unwrap());
        assert_eq!(s.shift(-3), c);
    }

    #[test]
    fn validate_catches_violations() {
        let mut c = a1_fundamental();
        c.terms.insert("Y[1,1]".parse().unwrap(), TPoly::one());
        assert!(c.validate().is_err());

        let mut c = a1_fundamental();
        c.terms.insert("Y[1,2]^-1".parse().unwrap(), TPoly::constant(-1));
        assert!(c.validate().is_err());
    }

    #[test]
    fn plain_product_counts() {
        let c = a1_fundamental();
        let other = c.into_orbit(1);
        let p = c.mul_plain(&other);
        assert_eq!(p.len(), 4);
        assert!(p.terms().values().all(TPoly::is_one));
    }
}
