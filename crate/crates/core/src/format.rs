//! Text, JSON and DOT renderings of characters, graphs and KL tables.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::cartan::DynkinDiagram;
use crate::error::{Error, Result};
use crate::fm::ColoredGraph;
use crate::kl::KLTables;
use crate::qchar::QCharacter;
use crate::tlaurent::TPoly;
use crate::ymonomial::{DominantMonomial, Monomial, Var};

/// `[vertex, orbit, step, exponent]`.
type Atom = (usize, u32, i32, i32);

fn atoms(m: &Monomial) -> Vec<Atom> {
    m.factors()
        .iter()
        .map(|&(v, e)| (v.vertex, v.at.orbit, v.at.step, e))
        .collect()
}

fn from_atoms(d: &DynkinDiagram, a: &[Atom]) -> Result<Monomial> {
    let mut seen = std::collections::BTreeSet::new();
    let mut f = Vec::with_capacity(a.len());
    for &(k, o, n, e) in a {
        d.check_vertex(k)?;
        let v = Var::new(k, o, n);
        if e == 0 || !seen.insert(v) {
            return Err(Error::Parse(format!("bad monomial atom [{k},{o},{n},{e}]")));
        }
        f.push((v, e));
    }
    Ok(Monomial::from_factors(f))
}

#[derive(Serialize, Deserialize)]
struct TermWire {
    monomial: Vec<Atom>,
    coeff: TPoly,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CharacterWire {
    diagram: String,
    highest: Vec<Atom>,
    terms: Vec<TermWire>,
}

fn to_wire(chi: &QCharacter) -> CharacterWire {
    CharacterWire {
        diagram: chi.diagram().to_string(),
        highest: atoms(chi.highest().monomial()),
        terms: chi
            .terms()
            .iter()
            .map(|(m, c)| TermWire {
                monomial: atoms(m),
                coeff: c.clone(),
            })
            .collect(),
    }
}

fn from_wire(w: CharacterWire) -> Result<QCharacter> {
    let d: DynkinDiagram = w.diagram.parse()?;
    let highest = DominantMonomial::new(from_atoms(&d, &w.highest)?)?;
    let mut terms = BTreeMap::new();
    for t in w.terms {
        if t.coeff.is_zero() {
            return Err(Error::Parse("zero coefficient stored".into()));
        }
        if terms.insert(from_atoms(&d, &t.monomial)?, t.coeff).is_some() {
            return Err(Error::Parse("repeated monomial".into()));
        }
    }
    Ok(QCharacter::from_parts(d, highest, terms))
}

pub(crate) fn character_value(chi: &QCharacter) -> serde_json::Value {
    serde_json::to_value(to_wire(chi)).expect("character serializes")
}

pub(crate) fn character_from_value(v: serde_json::Value) -> Result<QCharacter> {
    from_wire(serde_json::from_value(v)?)
}

/// Canonical JSON: terms in canonical monomial order, atoms as
/// `[vertex, orbit, step, exponent]`, coefficients as exponent → integer maps.
pub fn character_to_json(chi: &QCharacter) -> String {
    serde_json::to_string_pretty(&to_wire(chi)).expect("character serializes")
}

pub fn character_from_json(s: &str) -> Result<QCharacter> {
    from_wire(serde_json::from_str(s)?)
}

fn coeff_prefix(c: &TPoly) -> String {
    if c.is_one() {
        String::new()
    } else {
        format!("({c}) ")
    }
}

/// One term per line, ordered by depth below the highest monomial.
pub fn character_to_text(chi: &QCharacter) -> Result<String> {
    let show = chi.orbits().len() > 1;
    let mut out = String::new();
    for (_, m, c) in chi.terms_by_depth()? {
        writeln!(out, "{}{}", coeff_prefix(c), m.render(show)).unwrap();
    }
    Ok(out)
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Graphviz rendering. Vertex ids follow the canonical monomial order; an edge
/// labelled `k,e^n` divides by `A_{k,eps^n}`.
pub fn graph_to_dot(g: &ColoredGraph) -> String {
    let show = g
        .vertices
        .iter()
        .flat_map(|(m, _)| m.orbits())
        .collect::<std::collections::BTreeSet<_>>()
        .len()
        > 1;
    let mut out = String::from("digraph qchar {\n");
    for (i, (m, c)) in g.vertices.iter().enumerate() {
        let label = format!("{}{}", coeff_prefix(c), m.render(show));
        writeln!(out, "  n{i} [label=\"{}\"];", dot_escape(&label)).unwrap();
    }
    for e in &g.edges {
        let point = if show {
            format!("{}:e^{}", e.at.orbit, e.at.step)
        } else {
            format!("e^{}", e.at.step)
        };
        writeln!(
            out,
            "  n{} -> n{} [label=\"{},{}\"];",
            e.from, e.to, e.color, point
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

/// Rows `Q` of the closure of `P` with `Z_{QP}(t)` and `[M_P : L_Q]`.
pub fn multiplicity_table(tables: &KLTables) -> String {
    let p = tables.top();
    let mut out = String::from("Q\tZ_QP(t)\t[M_P:L_Q]\n");
    for (q, z) in tables.column(p) {
        if z.is_zero() {
            continue;
        }
        writeln!(out, "{}\t{}\t{}", tables.element(q), z, z.eval_one()).unwrap();
    }
    out
}

fn matrix_value(tables: &KLTables, m: &[Vec<TPoly>]) -> serde_json::Value {
    let n = tables.len();
    let rows: Vec<Vec<serde_json::Value>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| serde_json::to_value(&m[i][j]).expect("poly serializes"))
                .collect()
        })
        .collect();
    serde_json::Value::from(rows)
}

/// Full audit dump: poset elements in index order and the matrices
/// `c`, `c^-1`, `u`, `Z` indexed `[row][column]`.
pub fn kl_tables_to_json(tables: &KLTables) -> String {
    let elements: Vec<Vec<Atom>> = (0..tables.len())
        .map(|i| atoms(tables.element(i).monomial()))
        .collect();
    let v = serde_json::json!({
        "diagram": tables.diagram().to_string(),
        "elements": elements,
        "top": tables.top(),
        "c": matrix_value(tables, tables.c()),
        "c_inv": matrix_value(tables, tables.c_inv()),
        "u": matrix_value(tables, tables.u()),
        "z": matrix_value(tables, tables.z()),
    });
    serde_json::to_string_pretty(&v).expect("tables serialize")
}
