//! Combinatorial model of Nakayama algebras and their uniserial modules.
//!
//! An algebra is a quiver shape (a linearly or cyclically oriented type-A
//! quiver) together with its Kupisch series, the sequence of Loewy lengths
//! `c_1..c_n` of the indecomposable projectives. Every indecomposable module
//! is uniserial and is encoded as `(top vertex, length)`; the projective at
//! vertex `a` is `(a, c_a)` and the simple is `(a, 1)`. The AR translate of a
//! non-projective `(a, l)` is `(a+1, l)`, with the top read modulo `n` on the
//! cyclic shape.

use crate::error::{Error, Result};
use std::collections::BTreeSet;
use std::fmt;

/// Orientation of the underlying type-A quiver.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Shape {
    Linear,
    Cyclic,
}

/// A Nakayama algebra given by shape and Kupisch series.
///
/// Vertices are numbered `1..=n` along the arrows. The zero algebra (`n = 0`)
/// is legal and has no indecomposables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlgebraSpec {
    shape: Shape,
    kupisch: Vec<u32>,
}

/// An indecomposable uniserial module: top vertex and composition length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Indec {
    pub top: u32,
    pub len: u32,
}

impl Indec {
    pub fn new(top: u32, len: u32) -> Self {
        Indec { top, len }
    }
}

impl fmt::Display for Indec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M({},{})", self.top, self.len)
    }
}

/// A basic module: a duplicate-free set of indecomposables in canonical
/// `(top, len)` order. The empty set is the zero module.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ModuleSet {
    items: Vec<Indec>,
}

impl ModuleSet {
    pub fn new(mut items: Vec<Indec>) -> Self {
        items.sort();
        items.dedup();
        ModuleSet { items }
    }

    pub fn zero() -> Self {
        ModuleSet { items: Vec::new() }
    }

    pub fn items(&self) -> &[Indec] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// The empty set denotes the zero module.
    pub fn is_zero(&self) -> bool {
        self.items.is_empty()
    }

    pub fn contains(&self, m: Indec) -> bool {
        self.items.binary_search(&m).is_ok()
    }
}

impl fmt::Display for ModuleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.items.is_empty() {
            return write!(f, "0");
        }
        for (k, m) in self.items.iter().enumerate() {
            if k > 0 {
                write!(f, "+")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

/// One connected component of a vertex-killing quotient, together with the
/// map from component vertices (1-based) back to parent vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientComponent {
    pub algebra: AlgebraSpec,
    pub vertex_map: Vec<u32>,
}

/// Result of killing a vertex set: the surviving vertices partitioned into
/// connected components, each a valid algebra in its own right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientResult {
    pub components: Vec<QuotientComponent>,
}

impl AlgebraSpec {
    /// Uniform algebra: the path algebra of the type-A quiver with `n`
    /// vertices modulo the `r`-th power of the radical.
    pub fn uniform(shape: Shape, n: usize, r: u32) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidInput("radical exponent r must be >= 1".into()));
        }
        let kupisch = match shape {
            Shape::Linear => (1..=n).map(|a| r.min((n - a + 1) as u32)).collect(),
            Shape::Cyclic => vec![r; n],
        };
        Ok(AlgebraSpec { shape, kupisch })
    }

    /// Linear Nakayama algebra with an arbitrary admissible Kupisch series.
    pub fn linear(kupisch: Vec<u32>) -> Result<Self> {
        let n = kupisch.len();
        for (j, &c) in kupisch.iter().enumerate() {
            if c == 0 {
                return Err(Error::InvalidKupisch {
                    index: j + 1,
                    message: "entries must be positive".into(),
                });
            }
            if j + 1 < n && c > kupisch[j + 1] + 1 {
                return Err(Error::InvalidKupisch {
                    index: j + 1,
                    message: format!("{} > {} + 1", c, kupisch[j + 1]),
                });
            }
        }
        if n >= 1 && kupisch[n - 1] != 1 {
            return Err(Error::InvalidKupisch {
                index: n,
                message: "last entry must be 1".into(),
            });
        }
        Ok(AlgebraSpec { shape: Shape::Linear, kupisch })
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn n(&self) -> usize {
        self.kupisch.len()
    }

    pub fn kupisch(&self) -> &[u32] {
        &self.kupisch
    }

    /// Loewy length `c_a` of the projective at `vertex` (1-based).
    pub fn loewy_length(&self, vertex: u32) -> u32 {
        self.kupisch[(vertex - 1) as usize]
    }

    pub fn is_valid_indec(&self, m: Indec) -> bool {
        m.top >= 1
            && (m.top as usize) <= self.n()
            && m.len >= 1
            && m.len <= self.loewy_length(m.top)
    }

    pub fn is_projective(&self, m: Indec) -> bool {
        m.len == self.loewy_length(m.top)
    }

    /// All indecomposables `{(a, l) : 1 <= a <= n, 1 <= l <= c_a}` in
    /// canonical order. Their number is the sum of the Kupisch series.
    pub fn indecomposables(&self) -> Vec<Indec> {
        let mut out = Vec::with_capacity(self.kupisch.iter().map(|&c| c as usize).sum());
        for (j, &c) in self.kupisch.iter().enumerate() {
            for l in 1..=c {
                out.push(Indec::new(j as u32 + 1, l));
            }
        }
        out
    }

    fn next_vertex(&self, v: u32) -> u32 {
        match self.shape {
            Shape::Linear => v + 1,
            Shape::Cyclic => v % self.n() as u32 + 1,
        }
    }

    /// AR translate: zero (`None`) on projectives, otherwise the top moves
    /// one step along the arrows. The Kupisch invariant `c_a <= c_{a+1} + 1`
    /// guarantees the result is again a valid indecomposable.
    pub fn tau(&self, m: Indec) -> Option<Indec> {
        debug_assert!(self.is_valid_indec(m));
        if self.is_projective(m) {
            return None;
        }
        let t = Indec::new(self.next_vertex(m.top), m.len);
        debug_assert!(self.is_valid_indec(t));
        Some(t)
    }

    /// Whether `Hom(M, N)` is nonzero. A nonzero map between uniserials is a
    /// length-k top-quotient of the source matching a length-k
    /// socle-submodule of the target.
    pub fn hom_nonzero(&self, m: Indec, n: Indec) -> bool {
        self.hom_dim(m, n) > 0
    }

    /// Dimension of `Hom(M, N)`: the number of admissible matching lengths.
    pub fn hom_dim(&self, m: Indec, n: Indec) -> usize {
        debug_assert!(self.is_valid_indec(m) && self.is_valid_indec(n));
        let (a, l) = (m.top as i64, m.len as i64);
        let (b, mm) = (n.top as i64, n.len as i64);
        match self.shape {
            Shape::Linear => {
                // The matching length k = b + m - a must satisfy 1 <= k <= min(l, m).
                if b <= a && a < b + mm && a + l >= b + mm {
                    1
                } else {
                    0
                }
            }
            Shape::Cyclic => {
                let nn = self.n() as i64;
                let k0 = (b + mm - a - 1).rem_euclid(nn) + 1;
                let cap = l.min(mm);
                if k0 <= cap {
                    ((cap - k0) / nn + 1) as usize
                } else {
                    0
                }
            }
        }
    }

    /// Composition factors of `m` as a vertex multiset in radical order:
    /// `top, top+1, ...` with mod-n reduction on the cyclic shape.
    pub fn composition_vertices(&self, m: Indec) -> Vec<u32> {
        debug_assert!(self.is_valid_indec(m));
        let mut out = Vec::with_capacity(m.len as usize);
        let mut v = m.top;
        for _ in 0..m.len {
            out.push(v);
            v = self.next_vertex(v);
        }
        out
    }

    /// Quotient by the idempotents of `killed`. Surviving vertices split
    /// into maximal runs along the arrows; within a run of length L the new
    /// Loewy lengths are clipped to the distance to the run's end,
    /// `c'_j = min(c_parent, L - j + 1)`.
    pub fn quotient_kill(&self, killed: &BTreeSet<u32>) -> QuotientResult {
        let n = self.n();
        debug_assert!(killed.iter().all(|&v| v >= 1 && v as usize <= n));
        if self.shape == Shape::Cyclic && killed.is_empty() && n > 0 {
            return QuotientResult {
                components: vec![QuotientComponent {
                    algebra: self.clone(),
                    vertex_map: (1..=n as u32).collect(),
                }],
            };
        }
        // Visit vertices in arrow order; on the cyclic shape start right
        // after the smallest killed vertex so runs never straddle the start.
        let order: Vec<u32> = match self.shape {
            Shape::Linear => (1..=n as u32).collect(),
            Shape::Cyclic => {
                if n == 0 {
                    Vec::new()
                } else {
                    let start = *killed.iter().next().unwrap() % n as u32 + 1;
                    (0..n as u32).map(|k| (start - 1 + k) % n as u32 + 1).collect()
                }
            }
        };
        let mut components = Vec::new();
        let mut run: Vec<u32> = Vec::new();
        let flush = |run: &mut Vec<u32>, components: &mut Vec<QuotientComponent>| {
            if run.is_empty() {
                return;
            }
            let len = run.len() as u32;
            let kupisch: Vec<u32> = run
                .iter()
                .enumerate()
                .map(|(j, &v)| self.loewy_length(v).min(len - j as u32))
                .collect();
            let algebra = AlgebraSpec::linear(kupisch)
                .expect("vertex-killing quotients always yield valid Kupisch series");
            components.push(QuotientComponent { algebra, vertex_map: std::mem::take(run) });
        };
        for v in order {
            if killed.contains(&v) {
                flush(&mut run, &mut components);
            } else {
                run.push(v);
            }
        }
        flush(&mut run, &mut components);
        QuotientResult { components }
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shape = match self.shape {
            Shape::Linear => "linear",
            Shape::Cyclic => "cyclic",
        };
        write!(f, "{shape} {:?}", self.kupisch)
    }
}
