//! Plane partitions, their colored tuples, ordinary partitions and the
//! partition pairs `(lambda, mu)` indexing the cobordism basis.

use std::collections::BTreeSet;
use std::fmt;

use crate::charalg::{LaurentPoly, TORUS_DIM};
use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Whether `other` is contained in `self` as a multiset of parts.
    pub fn contains_multiset(&self, other: &Partition) -> bool {
        let mut pool = self.0.clone();
        for p in &other.0 {
            match pool.iter().position(|q| q == p) {
                Some(i) => {
                    pool.remove(i);
                }
                None => return false,
            }
        }
        true
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        let s: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

/// All partitions of `n`, in reverse lexicographic order (`(n)` first).
pub fn enum_partitions(n: u32) -> Vec<Partition> {
    fn go(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            go(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// A finite downward-closed set of boxes `(i, j, k)` in the positive octant.
///
/// Stored as layers: `layers[k][i]` is the length of row `i` in the
/// horizontal slice at height `k`, so each layer is a Young diagram
/// contained in the one below it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PlanePartition {
    layers: Vec<Vec<u32>>,
}

impl PlanePartition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a plane partition from an explicit box set, checking that it is
    /// downward closed.
    pub fn from_boxes(boxes: &[[u32; 3]]) -> Result<Self> {
        let set: BTreeSet<[u32; 3]> = boxes.iter().copied().collect();
        if set.len() != boxes.len() {
            return Err(Error::InvalidPartition("repeated box".into()));
        }
        if !is_downward_closed(&set) {
            return Err(Error::InvalidPartition("box set is not downward closed".into()));
        }
        let height = set.iter().map(|b| b[2] + 1).max().unwrap_or(0);
        let mut layers = vec![Vec::new(); height as usize];
        for &[i, j, k] in &set {
            let layer = &mut layers[k as usize];
            if layer.len() <= i as usize {
                layer.resize(i as usize + 1, 0);
            }
            layer[i as usize] = layer[i as usize].max(j + 1);
        }
        Ok(Self { layers })
    }

    pub fn size(&self) -> usize {
        self.layers.iter().flatten().map(|&x| x as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.layers.is_empty()
    }

    /// Boxes in `(k, i, j)` layer order.
    pub fn boxes(&self) -> Vec<[u32; 3]> {
        let mut out = Vec::with_capacity(self.size());
        for (k, layer) in self.layers.iter().enumerate() {
            for (i, &len) in layer.iter().enumerate() {
                for j in 0..len {
                    out.push([i as u32, j, k as u32]);
                }
            }
        }
        out
    }

    /// Character `sum t1^i t2^j t3^k` of the monomial quotient, as a rank-0
    /// Laurent polynomial.
    pub fn character(&self) -> LaurentPoly {
        LaurentPoly::from_terms(
            0,
            self.boxes().into_iter().map(|[i, j, k]| (vec![i64::from(i), i64::from(j), i64::from(k)], 1)),
        )
        .expect("exponents have torus length")
    }

    /// Character of the quotient when the chart coordinates carry the
    /// characters `coords` (in the global torus basis), padded to `rank`
    /// colors and multiplied by `color`.
    pub(crate) fn character_in_chart(&self, coords: &[[i64; 3]; 3], color: &[i64]) -> LaurentPoly {
        let rank = color.len() - TORUS_DIM;
        let terms = self.boxes().into_iter().map(|[i, j, k]| {
            let (i, j, k) = (i64::from(i), i64::from(j), i64::from(k));
            let mut e = color.to_vec();
            for a in 0..TORUS_DIM {
                e[a] += i * coords[0][a] + j * coords[1][a] + k * coords[2][a];
            }
            (e, 1)
        });
        LaurentPoly::from_terms(rank, terms).expect("exponent lengths agree")
    }
}

impl fmt::Display for PlanePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let boxes: Vec<String> = self.boxes().iter().map(|[i, j, k]| format!("{i},{j},{k}")).collect();
        write!(f, "{{{}}}", boxes.join(";"))
    }
}

pub fn is_downward_closed(boxes: &BTreeSet<[u32; 3]>) -> bool {
    boxes.iter().all(|&[i, j, k]| {
        (i == 0 || boxes.contains(&[i - 1, j, k]))
            && (j == 0 || boxes.contains(&[i, j - 1, k]))
            && (k == 0 || boxes.contains(&[i, j, k - 1]))
    })
}

/// Young diagrams of size `n` whose rows fit under `bound` (a weakly
/// decreasing row-length bound; `None` means unbounded).
fn diagrams_within(n: u32, bound: Option<&[u32]>) -> Vec<Vec<u32>> {
    fn go(row: usize, rem: u32, max: u32, bound: Option<&[u32]>, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        let cap = match bound {
            Some(b) => b.get(row).copied().unwrap_or(0),
            None => rem,
        };
        for len in (1..=rem.min(max).min(cap)).rev() {
            cur.push(len);
            go(row + 1, rem - len, len, bound, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, n, bound, &mut Vec::new(), &mut out);
    out
}

/// All plane partitions of size `n`, each exactly once, generated layer by
/// layer from the bottom.
pub fn enum_plane_partitions(n: usize) -> Vec<PlanePartition> {
    fn go(rem: u32, below: Option<&[u32]>, layers: &mut Vec<Vec<u32>>, out: &mut Vec<PlanePartition>) {
        if rem == 0 {
            out.push(PlanePartition { layers: layers.clone() });
            return;
        }
        let below_size: u32 = below.map_or(rem, |b| b.iter().sum());
        for size in (1..=rem.min(below_size)).rev() {
            for d in diagrams_within(size, below) {
                layers.push(d);
                let top = layers.last().cloned().expect("just pushed");
                go(rem - size, Some(&top), layers, out);
                layers.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n as u32, None, &mut Vec::new(), &mut out);
    out
}

/// An `r`-tuple of plane partitions: a torus-fixed quotient of `O^r` on a
/// chart.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColoredPlanePartition {
    parts: Vec<PlanePartition>,
}

impl ColoredPlanePartition {
    pub fn new(parts: Vec<PlanePartition>) -> Self {
        Self { parts }
    }

    pub fn empty(rank: usize) -> Self {
        Self { parts: vec![PlanePartition::empty(); rank] }
    }

    pub fn rank(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(PlanePartition::size).sum()
    }

    pub fn parts(&self) -> &[PlanePartition] {
        &self.parts
    }
}

impl fmt::Display for ColoredPlanePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", s.join(" | "))
    }
}

/// Weak compositions of `n` into `r` parts, lexicographically decreasing.
pub fn compositions(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn go(rem: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 1 {
            cur.push(rem);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for k in (0..=rem).rev() {
            cur.push(k);
            go(rem - k, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if r == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(n, r, &mut Vec::new(), &mut out);
    out
}

/// All `r`-colored plane partitions of total size `n`: compositions of `n`
/// into `r` parts, then Cartesian products of per-color enumerations.
pub fn enum_colored(n: usize, r: usize) -> Vec<ColoredPlanePartition> {
    let per_size: Vec<Vec<PlanePartition>> = (0..=n).map(enum_plane_partitions).collect();
    let mut out = Vec::new();
    for comp in compositions(n, r) {
        let mut acc: Vec<Vec<PlanePartition>> = vec![Vec::new()];
        for &k in &comp {
            let mut next = Vec::with_capacity(acc.len() * per_size[k].len());
            for prefix in &acc {
                for pp in &per_size[k] {
                    let mut v = prefix.clone();
                    v.push(pp.clone());
                    next.push(v);
                }
            }
            acc = next;
        }
        out.extend(acc.into_iter().map(ColoredPlanePartition::new));
    }
    out
}

/// A partition `lambda` together with a sub-multiset `mu` of its parts of
/// length at most `r`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartitionPair {
    pub lambda: Partition,
    pub mu: Partition,
}

impl PartitionPair {
    pub fn new(lambda: Partition, mu: Partition, r: usize) -> Result<Self> {
        if mu.len() > r {
            return Err(Error::InvalidPartition(format!("mu = {mu} is longer than r = {r}")));
        }
        if !lambda.contains_multiset(&mu) {
            return Err(Error::InvalidPartition(format!("{mu} is not a sub-partition of {lambda}")));
        }
        Ok(Self { lambda, mu })
    }
}

impl fmt::Display for PartitionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{}", self.lambda, self.mu)
    }
}

/// All partition pairs of size `n` and type `r`, up to permuting equal parts.
pub fn enum_partition_pairs(n: u32, r: usize) -> Vec<PartitionPair> {
    let mut out = Vec::new();
    for lambda in enum_partitions(n) {
        // distinct part values with multiplicities, largest first
        let mut groups: Vec<(u32, usize)> = Vec::new();
        for &p in lambda.parts() {
            match groups.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => groups.push((p, 1)),
            }
        }
        let mut choice = vec![0usize; groups.len()];
        loop {
            let len: usize = choice.iter().sum();
            if len <= r {
                let mut mu = Vec::with_capacity(len);
                for (&(v, _), &c) in groups.iter().zip(&choice) {
                    mu.extend(std::iter::repeat_n(v, c));
                }
                out.push(PartitionPair { lambda: lambda.clone(), mu: Partition(mu) });
            }
            // odometer over multiplicities
            let mut i = 0;
            while i < groups.len() && choice[i] == groups[i].1 {
                choice[i] = 0;
                i += 1;
            }
            if i == groups.len() {
                break;
            }
            choice[i] += 1;
        }
    }
    out
}
