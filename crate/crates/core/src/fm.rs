//! Step 1: the t-deformed Frenkel–Mukhin expansion and the coloured graph of a
//! character.
//!
//! The expansion works on the modified character (coefficients multiplied by
//! `t^{d(m, m_P)}`), in which every colour-`k` slice is a sum of products of
//! t-strings `Y_{k,b}^n (1 + A_{k,b eps}^-1)^n_t` with polynomial coefficients.
//! Monomials are processed in order of their depth below the highest monomial.
//! For each monomial and colour, the part of its coefficient not yet
//! accounted for by colour-`k` strings anchored higher up becomes the
//! coefficient of a new string product anchored at that monomial.

use std::collections::{BTreeMap, BTreeSet};

use crate::cartan::DynkinDiagram;
use crate::error::{Error, Result};
use crate::qchar::QCharacter;
use crate::tlaurent::{string_weight, TPoly};
use crate::ymonomial::{a_unchecked, DominantMonomial, Monomial, Spectral};

/// Default cap on the number of monomials a single expansion may create.
pub const DEFAULT_MAX_MONOMIALS: usize = 1_000_000;

struct StringTerm {
    monomial: Monomial,
    depth: u32,
    weight: TPoly,
}

fn string_terms(d: &DynkinDiagram, m: &Monomial, k: usize) -> Result<Vec<StringTerm>> {
    let strings: Vec<(Spectral, u32)> = m
        .color(k)
        .filter(|&(_, e)| e > 0)
        .map(|(b, e)| (b, e as u32))
        .collect();
    if strings.is_empty() {
        return Err(Error::Precondition(format!(
            "{m} has no positive colour-{k} factor"
        )));
    }
    let mut out = vec![StringTerm {
        monomial: m.clone(),
        depth: 0,
        weight: TPoly::one(),
    }];
    for (b, n) in strings {
        let a_inv = a_unchecked(d, k, b.shift(1)).inv();
        let mut next = Vec::with_capacity(out.len() * (n as usize + 1));
        for term in &out {
            let mut mono = term.monomial.clone();
            for r in 0..=n {
                next.push(StringTerm {
                    monomial: mono.clone(),
                    depth: term.depth + r,
                    weight: &term.weight * &string_weight(n, r)?,
                });
                mono = mono.mul(&a_inv);
            }
        }
        out = next;
    }
    Ok(out)
}

/// Expands the product of the colour-`k` strings sitting on the positive
/// colour-`k` factors of `m`.
pub fn k_string_expansion(
    d: &DynkinDiagram,
    m: &Monomial,
    k: usize,
) -> Result<BTreeMap<Monomial, TPoly>> {
    d.check_vertex(k)?;
    let mut out: BTreeMap<Monomial, TPoly> = BTreeMap::new();
    for t in string_terms(d, m, k)? {
        *out.entry(t.monomial).or_default() += &t.weight;
    }
    Ok(out)
}

/// Computes the character with highest monomial `highest` from the string
/// condition alone. Fails with [`Error::Inconsistent`] when the condition
/// does not determine the character, e.g. when a second l-dominant monomial
/// shows up.
pub fn fm_expand(d: &DynkinDiagram, highest: &DominantMonomial, limit: usize) -> Result<QCharacter> {
    fm_expand_modified(d, highest, limit)?.untilde()
}

/// As [`fm_expand`], returning the modified character.
pub fn fm_expand_modified(
    d: &DynkinDiagram,
    highest: &DominantMonomial,
    limit: usize,
) -> Result<QCharacter> {
    highest.check_vertices(d)?;
    let rank = d.rank();
    // levels[depth]: monomial -> per-colour amount explained by strings so far
    let mut levels: Vec<BTreeMap<Monomial, Vec<TPoly>>> =
        vec![BTreeMap::from([(highest.monomial().clone(), vec![TPoly::zero(); rank])])];
    let mut seen = 1usize;
    let mut table: BTreeMap<Monomial, TPoly> = BTreeMap::new();

    let mut depth = 0;
    while depth < levels.len() {
        let level = std::mem::take(&mut levels[depth]);
        for (m, explained) in level {
            let coeff = if depth == 0 {
                TPoly::one()
            } else {
                settled_coefficient(&m, &explained)?
            };
            if !coeff.is_zero() && !coeff.has_nonnegative_coefficients() {
                return Err(Error::Inconsistent(format!(
                    "negative coefficient {coeff} at {m}"
                )));
            }
            for k in d.vertices() {
                let rho = &coeff - &explained[k - 1];
                if rho.is_zero() {
                    continue;
                }
                if m.color(k).any(|(_, e)| e < 0) {
                    return Err(Error::Inconsistent(format!(
                        "unexplained colour-{k} remainder {rho} at {m}"
                    )));
                }
                // no colour-k factor: an empty string product, nothing below it
                if m.color(k).next().is_none() {
                    continue;
                }
                for term in string_terms(d, &m, k)? {
                    if term.depth == 0 {
                        continue;
                    }
                    let at = depth + term.depth as usize;
                    if levels.len() <= at {
                        levels.resize_with(at + 1, BTreeMap::new);
                    }
                    let slot = levels[at].entry(term.monomial).or_insert_with(|| {
                        seen += 1;
                        vec![TPoly::zero(); rank]
                    });
                    slot[k - 1] += &(&rho * &term.weight);
                    if seen > limit {
                        return Err(Error::LimitExceeded { limit });
                    }
                }
            }
            if !coeff.is_zero() {
                table.insert(m, coeff);
            }
        }
        depth += 1;
    }
    Ok(QCharacter::from_parts(d.clone(), highest.clone(), table))
}

/// The coefficient of a non-highest monomial is what the strings of each of
/// its negative colours put there; all such colours must agree.
fn settled_coefficient(m: &Monomial, explained: &[TPoly]) -> Result<TPoly> {
    let negative: BTreeSet<usize> = m
        .factors()
        .iter()
        .filter(|(_, e)| *e < 0)
        .map(|(v, _)| v.vertex)
        .collect();
    let mut colors = negative.iter();
    let Some(&first) = colors.next() else {
        return Err(Error::Inconsistent(format!(
            "l-dominant monomial {m} besides the highest one"
        )));
    };
    let value = &explained[first - 1];
    for &k in colors {
        if &explained[k - 1] != value {
            return Err(Error::Inconsistent(format!(
                "colours {first} and {k} disagree at {m}: {value} vs {}",
                explained[k - 1]
            )));
        }
    }
    Ok(value.clone())
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub color: usize,
    pub at: Spectral,
}

/// Vertices are the monomials of a character in canonical order; an edge
/// `m1 -(k,a)-> m2` joins `m2 = m1 A_{k,a}^-1` when `Y_{k,a eps^-1}` occurs in
/// `m1` with positive exponent, i.e. when the step lies on a colour-`k` string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    pub vertices: Vec<(Monomial, TPoly)>,
    pub edges: Vec<Edge>,
}

pub fn graph_of(chi: &QCharacter) -> ColoredGraph {
    let d = chi.diagram();
    let vertices: Vec<(Monomial, TPoly)> = chi
        .terms()
        .iter()
        .map(|(m, c)| (m.clone(), c.clone()))
        .collect();
    let index: BTreeMap<&Monomial, usize> =
        vertices.iter().enumerate().map(|(i, (m, _))| (m, i)).collect();

    let mut edges = Vec::new();
    for (i, (m, _)) in vertices.iter().enumerate() {
        for &(v, e) in m.factors() {
            if e <= 0 {
                continue;
            }
            let a = v.at.shift(1);
            if let Some(&j) = index.get(&m.mul(&a_unchecked(d, v.vertex, a).inv())) {
                edges.push(Edge {
                    from: i,
                    to: j,
                    color: v.vertex,
                    at: a,
                });
            }
        }
    }
    edges.sort();
    ColoredGraph { vertices, edges }
}
