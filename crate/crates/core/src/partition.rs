//! Set partitions of `[n]` and the partition lattice under refinement.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::Limits;

/// A set partition of `{1..n}` in canonical form: blocks sorted by their
/// minimum, elements ascending inside each block.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    /// Builds a partition from arbitrary blocks, canonicalizing them.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::InvalidArgument("empty block".into()));
            }
            for &e in block {
                if e == 0 || e > n {
                    return Err(Error::InvalidArgument(format!(
                        "element {e} outside 1..={n}"
                    )));
                }
                if seen[e - 1] {
                    return Err(Error::InvalidArgument(format!("element {e} repeated")));
                }
                seen[e - 1] = true;
            }
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidArgument(format!(
                "element {} not covered",
                missing + 1
            )));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(Partition { n, blocks })
    }

    /// Builds a partition from a block label per element (0-based elements).
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut map: HashMap<usize, usize> = HashMap::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (i, &l) in labels.iter().enumerate() {
            let idx = *map.entry(l).or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            blocks[idx].push(i + 1);
        }
        Partition {
            n: labels.len(),
            blocks,
        }
    }

    /// `0̂`: all singletons.
    pub fn finest(n: usize) -> Self {
        Partition {
            n,
            blocks: (1..=n).map(|i| vec![i]).collect(),
        }
    }

    /// `1̂`: a single block.
    pub fn coarsest(n: usize) -> Self {
        Partition {
            n,
            blocks: if n == 0 { vec![] } else { vec![(1..=n).collect()] },
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Number of blocks.
    pub fn size(&self) -> usize {
        self.blocks.len()
    }

    /// Block index of each element, 0-based elements; the restricted growth string.
    pub fn labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.n];
        for (b, block) in self.blocks.iter().enumerate() {
            for &e in block {
                labels[e - 1] = b;
            }
        }
        labels
    }

    /// Block sizes in decreasing order (the isomorphism type of `[0̂, π]`).
    pub fn block_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.blocks.iter().map(Vec::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    /// Refinement order: every block of `self` lies inside a block of `other`.
    pub fn leq(&self, other: &Partition) -> bool {
        if self.n != other.n {
            return false;
        }
        let coarse = other.labels();
        self.blocks
            .iter()
            .all(|b| b.iter().all(|&e| coarse[e - 1] == coarse[b[0] - 1]))
    }

    /// Greatest common refinement.
    pub fn meet(&self, other: &Partition) -> Partition {
        let a = self.labels();
        let b = other.labels();
        let n = self.n;
        let pair: Vec<usize> = (0..n).map(|i| a[i] * n + b[i]).collect();
        Partition::from_labels(&pair)
    }

    /// Finest common coarsening.
    pub fn join(&self, other: &Partition) -> Partition {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut c = x;
            while parent[c] != r {
                let next = parent[c];
                parent[c] = r;
                c = next;
            }
            r
        }
        for block in self.blocks.iter().chain(other.blocks.iter()) {
            for w in block.windows(2) {
                let (x, y) = (find(&mut parent, w[0] - 1), find(&mut parent, w[1] - 1));
                if x != y {
                    parent[x.max(y)] = x.min(y);
                }
            }
        }
        let roots: Vec<usize> = (0..self.n).map(|i| find(&mut parent, i)).collect();
        Partition::from_labels(&roots)
    }

    /// Image under a permutation given as 0-based images.
    pub fn permuted(&self, images: &[usize]) -> Partition {
        let blocks = self
            .blocks
            .iter()
            .map(|b| {
                let mut nb: Vec<usize> = b.iter().map(|&e| images[e - 1] + 1).collect();
                nb.sort_unstable();
                nb
            })
            .collect::<Vec<_>>();
        let mut blocks = blocks;
        blocks.sort_unstable_by_key(|b| b[0]);
        Partition { n: self.n, blocks }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n <= 9 { "" } else { "," };
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(sep)
            })
            .collect();
        write!(f, "{}", parts.join("|"))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"12|3"` (digits) or `"1,10|2,..."` (comma separated); the
    /// ground set size is the largest element.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Partition::new(0, vec![]);
        }
        let comma = s.contains(',');
        let mut blocks = Vec::new();
        for part in s.split('|') {
            let block: Vec<usize> = if comma {
                part.split(',')
                    .map(|x| {
                        x.trim()
                            .parse::<usize>()
                            .map_err(|_| Error::InvalidArgument(format!("bad element {x:?}")))
                    })
                    .collect::<Result<_>>()?
            } else {
                part.chars()
                    .map(|c| {
                        c.to_digit(10)
                            .map(|d| d as usize)
                            .ok_or_else(|| Error::InvalidArgument(format!("bad digit {c:?}")))
                    })
                    .collect::<Result<_>>()?
            };
            blocks.push(block);
        }
        let n = blocks.iter().flatten().copied().max().unwrap_or(0);
        Partition::new(n, blocks)
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All set partitions of `[n]` as restricted growth strings, in lex order.
fn enumerate_labels(n: usize) -> Vec<Vec<usize>> {
    fn rec(i: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for l in 0..=max + 1 {
            cur[i] = l;
            rec(i + 1, max.max(l), cur, out);
        }
    }
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    let mut cur = vec![0; n];
    rec(1, 0, &mut cur, &mut out);
    out
}

/// The partition lattice `Π_n`, elements ordered by decreasing size so that
/// index 0 is `0̂` and the last index is `1̂`.
#[derive(Clone, Debug)]
pub struct PartitionLattice {
    n: usize,
    elements: Vec<Partition>,
    index: HashMap<Partition, usize>,
}

pub fn build_partition_lattice(n: usize) -> Result<PartitionLattice> {
    PartitionLattice::with_limits(n, &Limits::default())
}

impl PartitionLattice {
    pub fn with_limits(n: usize, limits: &Limits) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("n must be at least 1".into()));
        }
        limits.check_lattice(n)?;
        let mut elements: Vec<Partition> = enumerate_labels(n)
            .iter()
            .map(|l| Partition::from_labels(l))
            .collect();
        elements.sort_by_key(|p| std::cmp::Reverse(p.size()));
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        Ok(PartitionLattice { n, elements, index })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Partition] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Partition {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.elements.len() - 1
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        i == j || self.elements[i].leq(&self.elements[j])
    }

    pub fn less(&self, i: usize, j: usize) -> bool {
        i != j && self.elements[i].size() > self.elements[j].size() && self.leq(i, j)
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.index[&self.elements[i].meet(&self.elements[j])]
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        self.index[&self.elements[i].join(&self.elements[j])]
    }

    /// Closed interval `[x, y]` in lattice order (ascending rank).
    pub fn closed_interval(&self, x: usize, y: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&z| self.leq(x, z) && self.leq(z, y))
            .collect()
    }

    /// Open interval `(x, y)`.
    pub fn open_interval(&self, x: usize, y: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&z| self.less(x, z) && self.less(z, y))
            .collect()
    }

    /// Möbius function by the defining recursion `μ(x,y) = −Σ_{x≤z<y} μ(x,z)`.
    pub fn mobius(&self, x: &Partition, y: &Partition) -> Result<i64> {
        let xi = self
            .index_of(x)
            .ok_or_else(|| Error::InvalidArgument(format!("{x} not in Pi_{}", self.n)))?;
        let yi = self
            .index_of(y)
            .ok_or_else(|| Error::InvalidArgument(format!("{y} not in Pi_{}", self.n)))?;
        if !self.leq(xi, yi) {
            return Err(Error::Order(format!("{x} is not below {y}")));
        }
        let interval = self.closed_interval(xi, yi);
        let mut mu: HashMap<usize, i64> = HashMap::new();
        for &z in &interval {
            let value = if z == xi {
                1
            } else {
                -interval
                    .iter()
                    .filter(|&&w| w != z && self.leq(w, z))
                    .map(|w| mu[w])
                    .sum::<i64>()
            };
            mu.insert(z, value);
        }
        Ok(mu[&yi])
    }

    pub fn to_document(&self) -> LatticeDocument {
        let mut leq_pairs = Vec::new();
        for i in 0..self.len() {
            for j in 0..self.len() {
                if self.leq(i, j) {
                    leq_pairs.push([i, j]);
                }
            }
        }
        LatticeDocument {
            version: LATTICE_DOCUMENT_VERSION,
            n: self.n,
            elements: self.elements.iter().map(ToString::to_string).collect(),
            leq_pairs,
        }
    }
}

pub const LATTICE_DOCUMENT_VERSION: u32 = 1;

/// Serialized form of a lattice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeDocument {
    pub version: u32,
    pub n: usize,
    pub elements: Vec<String>,
    pub leq_pairs: Vec<[usize; 2]>,
}
