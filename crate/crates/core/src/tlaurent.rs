//! Laurent polynomials in `t` with integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::de::{self, Deserialize, Deserializer};
use serde::ser::{Serialize, SerializeMap, Serializer};

use crate::error::{Error, Result};

/// Exact element of `Z[t, t^-1]`. Zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct TPoly {
    terms: BTreeMap<i32, i64>,
}

impl TPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::term(0, c)
    }

    /// `c * t^e`.
    pub fn term(e: i32, c: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    /// `t^e`.
    pub fn t_pow(e: i32) -> Self {
        Self::term(e, 1)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i32, i64)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: i32, c: i64) {
        if c == 0 {
            return;
        }
        let slot = self.terms.entry(e).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0) == Some(&1)
    }

    pub fn coeff(&self, e: i32) -> i64 {
        self.terms.get(&e).copied().unwrap_or(0)
    }

    /// `(exponent, coefficient)` pairs in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_exponent(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplication by `t^e`.
    pub fn shift(&self, e: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(&k, &c)| (k + e, c)).collect(),
        }
    }

    pub fn scale(&self, c: i64) -> Self {
        if c == 0 {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&k, &v)| (k, v * c)).collect(),
        }
    }

    /// The involution `t -> t^-1`.
    pub fn bar(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&k, &c)| (-k, c)).collect(),
        }
    }

    pub fn eval_one(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Constant term; this is the value at `t = 0` when `self` is a polynomial.
    pub fn constant_term(&self) -> i64 {
        self.coeff(0)
    }

    pub fn is_polynomial(&self) -> bool {
        self.min_exponent().is_none_or(|e| e >= 0)
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }

    /// Sum of the terms with strictly negative exponent.
    pub fn negative_part(&self) -> Self {
        Self {
            terms: self.terms.range(..0).map(|(&k, &c)| (k, c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl From<i64> for TPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl Add<&TPoly> for &TPoly {
    type Output = TPoly;
    fn add(self, rhs: &TPoly) -> TPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for TPoly {
    type Output = TPoly;
    fn add(mut self, rhs: TPoly) -> TPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&TPoly> for TPoly {
    fn add_assign(&mut self, rhs: &TPoly) {
        for (e, c) in rhs.terms() {
            self.add_term(e, c);
        }
    }
}

impl SubAssign<&TPoly> for TPoly {
    fn sub_assign(&mut self, rhs: &TPoly) {
        for (e, c) in rhs.terms() {
            self.add_term(e, -c);
        }
    }
}

impl Sub<&TPoly> for &TPoly {
    type Output = TPoly;
    fn sub(self, rhs: &TPoly) -> TPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for TPoly {
    type Output = TPoly;
    fn sub(mut self, rhs: TPoly) -> TPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        self.scale(-1)
    }
}

impl Neg for TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        self.scale(-1)
    }
}

impl Mul<&TPoly> for &TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &TPoly) -> TPoly {
        let mut out = TPoly::zero();
        for (a, x) in self.terms() {
            for (b, y) in rhs.terms() {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Mul for TPoly {
    type Output = TPoly;
    fn mul(self, rhs: TPoly) -> TPoly {
        &self * &rhs
    }
}

impl fmt::Display for TPoly {
    /// Descending powers, e.g. `t^2 + 1 + t^-2` or `-2t + 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().rev().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            match (i, c < 0) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                _ => write!(f, " {sign} ")?,
            }
            let a = c.unsigned_abs();
            match e {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}")?;
                    }
                    if e == 1 {
                        f.write_str("t")?;
                    } else {
                        write!(f, "t^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Serialize for TPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (e, c) in self.terms() {
            map.serialize_entry(&e.to_string(), &c)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for TPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = BTreeMap::<String, i64>::deserialize(deserializer)?;
        let mut p = TPoly::zero();
        for (k, c) in raw {
            let e: i32 = k
                .parse()
                .map_err(|_| de::Error::custom(format!("bad exponent `{k}`")))?;
            if c == 0 {
                return Err(de::Error::custom("zero coefficient stored"));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }
}

/// Balanced quantum integer `[m]_t = t^(m-1) + t^(m-3) + ... + t^(1-m)`.
pub fn quantum_integer(m: u32) -> TPoly {
    let m = m as i32;
    TPoly::from_terms((0..m).map(|i| (m - 1 - 2 * i, 1)))
}

/// Balanced Gaussian binomial `[n r]_t`, zero when `r` is outside `0..=n`.
pub fn t_binomial(n: u32, r: i64) -> TPoly {
    if r < 0 || r > n as i64 {
        return TPoly::zero();
    }
    let r = r as usize;
    // row[j] = [i j]_t, built with [i j] = t^-j [i-1 j] + t^(i-j) [i-1 j-1]
    let mut row = vec![TPoly::one()];
    for i in 1..=n as usize {
        let mut next = Vec::with_capacity(i + 1);
        for j in 0..=i {
            let mut v = TPoly::zero();
            if j < i {
                v += &row[j].shift(-(j as i32));
            }
            if j > 0 {
                v += &row[j - 1].shift((i - j) as i32);
            }
            next.push(v);
        }
        row = next;
    }
    row.swap_remove(r)
}

/// `t^(r(n-r)) [n r]_t`, the weight of the `r`-th step of an `n`-string.
pub fn string_weight(n: u32, r: u32) -> Result<TPoly> {
    if r > n {
        return Err(Error::Precondition(format!(
            "string step {r} exceeds string length {n}"
        )));
    }
    Ok(t_binomial(n, r as i64).shift((r * (n - r)) as i32))
}
