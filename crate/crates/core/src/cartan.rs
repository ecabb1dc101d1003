//! Simply-laced Dynkin data.
//!
//! Vertices are numbered `1..=rank` following Bourbaki:
//!
//! * `A_n`: the chain `1 - 2 - ... - n`.
//! * `D_n` (`n >= 4`): the chain `1 - 2 - ... - (n-2)` with both `n-1` and
//!   `n` attached to `n-2`.
//! * `E_6, E_7, E_8`: the chain `1 - 3 - 4 - 5 - 6 (- 7 - 8)` with `2`
//!   attached to `4`.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    D,
    E,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DynkinDiagram {
    family: Family,
    rank: usize,
    // adjacency[k - 1] lists the neighbours of vertex k in ascending order
    adjacency: Vec<Vec<usize>>,
}

impl DynkinDiagram {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let edges: Vec<(usize, usize)> = match family {
            Family::A if rank >= 1 => (1..rank).map(|i| (i, i + 1)).collect(),
            Family::D if rank >= 4 => {
                let mut e: Vec<_> = (1..rank - 1).map(|i| (i, i + 1)).collect();
                e.push((rank - 2, rank));
                e
            }
            Family::E if (6..=8).contains(&rank) => {
                let mut e = vec![(1, 3), (2, 4), (3, 4)];
                e.extend((4..rank).map(|i| (i, i + 1)));
                e
            }
            _ => return Err(Error::InvalidDiagram(format!("{family:?}{rank}"))),
        };
        let mut adjacency = vec![Vec::new(); rank];
        for (k, l) in edges {
            adjacency[k - 1].push(l);
            adjacency[l - 1].push(k);
        }
        for n in &mut adjacency {
            n.sort_unstable();
        }
        Ok(Self {
            family,
            rank,
            adjacency,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        1..=self.rank
    }

    pub fn contains(&self, k: usize) -> bool {
        (1..=self.rank).contains(&k)
    }

    pub fn check_vertex(&self, k: usize) -> Result<()> {
        if self.contains(k) {
            Ok(())
        } else {
            Err(Error::UnknownVertex {
                vertex: k,
                diagram: self.to_string(),
            })
        }
    }

    /// Neighbours of `k`. Panics if `k` is not a vertex.
    pub fn neighbors(&self, k: usize) -> &[usize] {
        &self.adjacency[k - 1]
    }

    /// Undirected edges `(k, l)` with `k < l`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.vertices()
            .flat_map(|k| {
                self.neighbors(k)
                    .iter()
                    .filter(move |&&l| l > k)
                    .map(move |&l| (k, l))
            })
            .collect()
    }

    pub fn cartan_entry(&self, k: usize, l: usize) -> Result<i32> {
        self.check_vertex(k)?;
        self.check_vertex(l)?;
        Ok(self.entry(k, l))
    }

    pub(crate) fn entry(&self, k: usize, l: usize) -> i32 {
        if k == l {
            2
        } else if self.adjacency[k - 1].binary_search(&l).is_ok() {
            -1
        } else {
            0
        }
    }

    pub fn cartan_matrix(&self) -> Vec<Vec<i32>> {
        self.vertices()
            .map(|k| self.vertices().map(|l| self.entry(k, l)).collect())
            .collect()
    }

    /// Positive roots in simple-root coordinates, sorted by height and then
    /// lexicographically.
    pub fn positive_roots(&self) -> Vec<Vec<i32>> {
        let n = self.rank;
        let mut roots: Vec<Vec<i32>> = Vec::new();
        let mut queue: VecDeque<Vec<i32>> = VecDeque::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            roots.push(e.clone());
            queue.push_back(e);
        }
        while let Some(beta) = queue.pop_front() {
            for i in 0..n {
                // <beta, alpha_i>; in simply-laced type beta + alpha_i is a root
                // exactly when this pairing is -1.
                let pairing: i32 = (0..n).map(|j| beta[j] * self.entry(j + 1, i + 1)).sum();
                if pairing == -1 {
                    let mut next = beta.clone();
                    next[i] += 1;
                    if !roots.contains(&next) {
                        roots.push(next.clone());
                        queue.push_back(next);
                    }
                }
            }
        }
        roots.sort_by(|a, b| {
            let ha: i32 = a.iter().sum();
            let hb: i32 = b.iter().sum();
            ha.cmp(&hb).then_with(|| a.cmp(b))
        });
        roots
    }

    /// Coefficients of the highest root in the basis of simple roots.
    pub fn highest_root(&self) -> Vec<i32> {
        self.positive_roots()
            .pop()
            .expect("every diagram has a simple root")
    }
}

impl fmt::Display for DynkinDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for DynkinDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('D') => Family::D,
            Some('E') => Family::E,
            _ => return Err(Error::InvalidDiagram(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::InvalidDiagram(s.to_string()))?;
        DynkinDiagram::new(family, rank).map_err(|_| Error::InvalidDiagram(s.to_string()))
    }
}

/// A direction for every edge of a diagram, stored as `(source, target)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    arrows: Vec<(usize, usize)>,
}

impl Orientation {
    pub fn new(d: &DynkinDiagram, arrows: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = Vec::new();
        for &(k, l) in &arrows {
            d.check_vertex(k)?;
            d.check_vertex(l)?;
            if d.entry(k, l) != -1 {
                return Err(Error::InvalidOrientation(format!(
                    "{k} and {l} are not adjacent in {d}"
                )));
            }
            let edge = (k.min(l), k.max(l));
            if seen.contains(&edge) {
                return Err(Error::InvalidOrientation(format!(
                    "edge {}-{} oriented twice",
                    edge.0, edge.1
                )));
            }
            seen.push(edge);
        }
        if seen.len() != d.edges().len() {
            return Err(Error::InvalidOrientation(format!(
                "{} of {} edges oriented",
                seen.len(),
                d.edges().len()
            )));
        }
        Ok(Self { arrows })
    }

    /// Every edge points from its smaller to its larger endpoint.
    pub fn ascending(d: &DynkinDiagram) -> Self {
        Self { arrows: d.edges() }
    }

    /// Parses `"1>2,2>3"`. The empty string orients a diagram with no edges.
    pub fn parse(d: &DynkinDiagram, s: &str) -> Result<Self> {
        let mut arrows = Vec::new();
        for item in s.split(',').map(str::trim).filter(|x| !x.is_empty()) {
            let (a, b) = item
                .split_once('>')
                .ok_or_else(|| Error::InvalidOrientation(format!("expected `k>l`, got `{item}`")))?;
            let parse = |x: &str| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidOrientation(format!("bad vertex `{x}`")))
            };
            arrows.push((parse(a)?, parse(b)?));
        }
        Self::new(d, arrows)
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }
}

/// Integer heights `m(k)` with `m(k) - m(l) = 1` on every arrow `k -> l`,
/// normalized so that the minimum is zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeightFunction(Vec<i32>);

impl HeightFunction {
    pub fn get(&self, k: usize) -> i32 {
        self.0[k - 1]
    }

    pub fn as_slice(&self) -> &[i32] {
        &self.0
    }
}

pub fn heights(d: &DynkinDiagram, o: &Orientation) -> HeightFunction {
    let n = d.rank();
    // signed[k] lists (l, m(l) - m(k))
    let mut signed = vec![Vec::new(); n];
    for &(k, l) in o.arrows() {
        signed[k - 1].push((l, -1));
        signed[l - 1].push((k, 1));
    }
    let mut m: Vec<Option<i32>> = vec![None; n];
    m[0] = Some(0);
    let mut queue = VecDeque::from([1usize]);
    while let Some(k) = queue.pop_front() {
        let mk = m[k - 1].expect("visited");
        for &(l, delta) in &signed[k - 1] {
            if m[l - 1].is_none() {
                m[l - 1] = Some(mk + delta);
                queue.push_back(l);
            }
        }
    }
    let raw: Vec<i32> = m.into_iter().map(|x| x.expect("diagram is connected")).collect();
    let min = raw.iter().copied().min().unwrap_or(0);
    HeightFunction(raw.into_iter().map(|x| x - min).collect())
}
