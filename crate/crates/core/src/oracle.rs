//! Brute-force ground truth: enumerates the actual tau-tilting and support
//! tau-tilting modules of desk-scale algebras by clique search over the
//! tau-rigidity compatibility graph, plus the named filter sets used by the
//! verification harness.

use crate::algebra::{AlgebraSpec, Indec, ModuleSet, Shape};
use std::collections::BTreeSet;

/// A support tau-tilting module together with its killed vertex set. The
/// module is tau-tilting over the quotient by `killed`, so the support
/// (complement of `killed`) is determined by the module and vice versa.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SupportPair {
    pub killed: BTreeSet<u32>,
    pub module: ModuleSet,
}

/// Compatibility graph of tau-rigidity: nodes are the indecomposables `X`
/// with `Hom(X, tau X) = 0`, and `X ~ Y` iff `Hom(X, tau Y) = 0` and
/// `Hom(Y, tau X) = 0`. A module set is tau-rigid exactly when all its
/// members are nodes and pairwise adjacent.
pub struct CompatGraph {
    nodes: Vec<Indec>,
    words: usize,
    adj: Vec<Vec<u64>>,
}

impl CompatGraph {
    pub fn nodes(&self) -> &[Indec] {
        &self.nodes
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i][j / 64] >> (j % 64) & 1 == 1
    }
}

fn hom_to_tau_zero(a: &AlgebraSpec, x: Indec, y: Indec) -> bool {
    match a.tau(y) {
        None => true,
        Some(t) => !a.hom_nonzero(x, t),
    }
}

pub fn build_compat_graph(a: &AlgebraSpec) -> CompatGraph {
    let nodes: Vec<Indec> = a
        .indecomposables()
        .into_iter()
        .filter(|&m| hom_to_tau_zero(a, m, m))
        .collect();
    let k = nodes.len();
    let words = k.div_ceil(64);
    let mut adj = vec![vec![0u64; words]; k];
    for i in 0..k {
        for j in i + 1..k {
            if hom_to_tau_zero(a, nodes[i], nodes[j]) && hom_to_tau_zero(a, nodes[j], nodes[i]) {
                adj[i][j / 64] |= 1 << (j % 64);
                adj[j][i / 64] |= 1 << (i % 64);
            }
        }
    }
    CompatGraph { nodes, words, adj }
}

fn popcount(bits: &[u64]) -> usize {
    bits.iter().map(|w| w.count_ones() as usize).sum()
}

/// All cliques of size exactly `k`, as ascending node-index lists in
/// lexicographic order. Branch and bound: a branch dies as soon as the
/// current clique plus all remaining candidates cannot reach `k`.
fn cliques_of_size(g: &CompatGraph, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    // one candidate bitset per search depth, reused across the whole walk
    let mut scratch = vec![vec![0u64; g.words]; k + 1];
    scratch[0] = vec![u64::MAX; g.words];
    if g.words > 0 {
        let tail = g.node_count() % 64;
        if tail > 0 {
            scratch[0][g.words - 1] = (1u64 << tail) - 1;
        }
    }
    descend(g, k, 0, &mut scratch, &mut cur, &mut out);
    out
}

fn descend(
    g: &CompatGraph,
    k: usize,
    depth: usize,
    scratch: &mut [Vec<u64>],
    cur: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    if cur.len() + popcount(&scratch[depth]) < k {
        return;
    }
    for w in 0..g.words {
        // recursion below never touches this depth's bitset
        let mut word = scratch[depth][w];
        while word != 0 {
            let bit = word.trailing_zeros() as usize;
            let v = w * 64 + bit;
            word &= word - 1;
            // candidates after v that stay adjacent to everything chosen
            {
                let (head, tail) = scratch.split_at_mut(depth + 1);
                let cand = &head[depth];
                for (u, slot) in tail[0].iter_mut().enumerate() {
                    *slot = if u < w {
                        0
                    } else if u == w {
                        cand[u] & g.adj[v][u] & !(1u64 << bit) & !((1u64 << bit) - 1)
                    } else {
                        cand[u] & g.adj[v][u]
                    };
                }
            }
            cur.push(v);
            descend(g, k, depth + 1, scratch, cur, out);
            cur.pop();
        }
    }
}

/// All tau-tilting modules of `a`: cliques of size `n` in the compatibility
/// graph, in canonical order.
pub fn enumerate_tau_tilting(a: &AlgebraSpec) -> Vec<ModuleSet> {
    let g = build_compat_graph(a);
    let result: Vec<ModuleSet> = cliques_of_size(&g, a.n())
        .into_iter()
        .map(|ix| ModuleSet::new(ix.into_iter().map(|i| g.nodes[i]).collect()))
        .collect();
    debug_assert!(a.n() == 0 || !result.is_empty(), "no tau-tilting module found on {a}");
    result
}

/// All support tau-tilting modules of `a`, paired with their killed vertex
/// sets. Iterates over every killed set, enumerates tau-tilting modules on
/// each quotient component, and lifts the cartesian products back through
/// the component vertex maps. Output is sorted by `(killed, module)`.
pub fn enumerate_support_tau_tilting(a: &AlgebraSpec) -> Vec<SupportPair> {
    let n = a.n();
    assert!(n < 64, "support enumeration iterates over 2^n killed sets");
    let mut out = Vec::new();
    for mask in 0u64..1u64 << n {
        let killed: BTreeSet<u32> =
            (0..n as u32).filter(|v| mask >> v & 1 == 1).map(|v| v + 1).collect();
        let quotient = a.quotient_kill(&killed);
        let mut lifted: Vec<Vec<Indec>> = vec![Vec::new()];
        for comp in &quotient.components {
            let local = enumerate_tau_tilting(&comp.algebra);
            let mut next = Vec::with_capacity(lifted.len() * local.len());
            for base in &lifted {
                for module in &local {
                    let mut items = base.clone();
                    items.extend(
                        module
                            .items()
                            .iter()
                            .map(|m| Indec::new(comp.vertex_map[(m.top - 1) as usize], m.len)),
                    );
                    next.push(items);
                }
            }
            lifted = next;
        }
        for items in lifted {
            let module = ModuleSet::new(items);
            debug_assert_eq!(module.len(), n - killed.len());
            out.push(SupportPair { killed: killed.clone(), module });
        }
    }
    out.sort();
    out
}

/// Splits support pairs into the proper ones (nonempty killed set) and the
/// proper ones with no summand projective over the parent algebra.
pub fn filter_proper_np(a: &AlgebraSpec, pairs: &[SupportPair]) -> (Vec<SupportPair>, Vec<SupportPair>) {
    let proper: Vec<SupportPair> =
        pairs.iter().filter(|p| !p.killed.is_empty()).cloned().collect();
    let proper_np = proper
        .iter()
        .filter(|p| !p.module.items().iter().any(|&m| a.is_projective(m)))
        .cloned()
        .collect();
    (proper, proper_np)
}

/// Set of vertices occurring among the composition factors of `module`.
pub fn module_support(a: &AlgebraSpec, module: &ModuleSet) -> BTreeSet<u32> {
    module
        .items()
        .iter()
        .flat_map(|&m| a.composition_vertices(m))
        .collect()
}

fn filter_by_support(
    a: &AlgebraSpec,
    required: impl Iterator<Item = u32> + Clone,
    excluded: Option<u32>,
) -> Vec<SupportPair> {
    enumerate_support_tau_tilting(a)
        .into_iter()
        .filter(|p| {
            let support = module_support(a, &p.module);
            required.clone().all(|v| support.contains(&v))
                && excluded.is_none_or(|v| !support.contains(&v))
        })
        .collect()
}

/// Support tau-tilting modules with the simples at `1..i-1` among their
/// composition factors but not the one at `i`.
pub fn filter_w(a: &AlgebraSpec, i: u32) -> Vec<SupportPair> {
    debug_assert!(i >= 1 && i as usize <= a.n());
    filter_by_support(a, 1..i, Some(i))
}

/// Support tau-tilting modules with the simples at `1..=ell` among their
/// composition factors.
pub fn filter_v(a: &AlgebraSpec, ell: u32) -> Vec<SupportPair> {
    debug_assert!(ell >= 1 && ell as usize <= a.n());
    filter_by_support(a, 1..=ell, None)
}

/// Support tau-tilting modules over the linear uniform algebra that avoid
/// the projectives at vertices `1..=n-r+1` as summands.
pub fn set_x(n: usize, r: u32) -> Vec<SupportPair> {
    let a = AlgebraSpec::uniform(Shape::Linear, n, r).expect("r >= 1");
    let banned_top = n as i64 - r as i64 + 1;
    enumerate_support_tau_tilting(&a)
        .into_iter()
        .filter(|p| {
            !p.module
                .items()
                .iter()
                .any(|&m| (m.top as i64) <= banned_top && a.is_projective(m))
        })
        .collect()
}

/// Modules of `set_x` whose composition factors include vertices `1..=ell`.
pub fn set_y(n: usize, r: u32, ell: usize) -> Vec<SupportPair> {
    let a = AlgebraSpec::uniform(Shape::Linear, n, r).expect("r >= 1");
    set_x(n, r)
        .into_iter()
        .filter(|p| {
            let support = module_support(&a, &p.module);
            (1..=ell as u32).all(|v| support.contains(&v))
        })
        .collect()
}

/// Cyclic support classes: for `ell = 0`, the modules avoiding the simple at
/// `n`; for `ell >= 1`, those with the simples at `n, n-1, .., n-ell+1`
/// among their factors but not the one at `n-ell`.
pub fn set_k(n: usize, r: u32, ell: usize) -> Vec<SupportPair> {
    assert!(n >= 1 && ell < n);
    let a = AlgebraSpec::uniform(Shape::Cyclic, n, r).expect("r >= 1");
    let required: Vec<u32> = (0..ell).map(|k| (n - k) as u32).collect();
    let excluded = (n - ell) as u32;
    filter_by_support(&a, required.into_iter(), Some(excluded))
}
