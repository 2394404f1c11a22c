//! Component groups of degenerate Jacobian fibres over a two-vertex dual
//! graph: the explicit presentation, its Smith normal form, and the closed
//! form for the order of the section-difference class.

mod snf;

pub use snf::{smith_normal_form, Snf};

use crate::exact::{gcd_u64, lcm_u64};
use alloc::vec;
use alloc::vec::Vec;
use snf::mat_vec;

/// Two-vertex dual graph of a degenerate fibre: `a` loops at the first
/// vertex, `b` loops at the second, and the remaining edges joining the two
/// vertices. Every edge carries a positive integer multiplicity
/// (modulus times the ramification multiplier `k`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualGraph {
    pub loops_v1: usize,
    pub loops_v2: usize,
    /// Edge multiplicities, ordered: loops at v1, loops at v2, connecting.
    pub moduli: Vec<u64>,
    pub k: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    EmptyConnecting,
    TooFewConnecting,
    NonPositiveModulus,
    ModuliNotCoprime,
    LoopOrderConvention,
}

impl core::fmt::Display for GraphError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            GraphError::EmptyConnecting => write!(f, "no connecting edges"),
            GraphError::TooFewConnecting => write!(f, "need at least two connecting edges"),
            GraphError::NonPositiveModulus => write!(f, "moduli must be positive"),
            GraphError::ModuliNotCoprime => write!(f, "moduli must have gcd one"),
            GraphError::LoopOrderConvention => write!(f, "loop counts must satisfy a <= b"),
        }
    }
}

impl DualGraph {
    pub fn new(loops_v1: usize, loops_v2: usize, moduli: Vec<u64>, k: u64) -> Result<Self, GraphError> {
        if moduli.iter().any(|&m| m == 0) || k == 0 {
            return Err(GraphError::NonPositiveModulus);
        }
        if loops_v1 > loops_v2 {
            return Err(GraphError::LoopOrderConvention);
        }
        let connecting = moduli.len().checked_sub(loops_v1 + loops_v2);
        match connecting {
            None | Some(0) => return Err(GraphError::EmptyConnecting),
            Some(1) => return Err(GraphError::TooFewConnecting),
            Some(_) => {}
        }
        let g = moduli.iter().fold(0u64, |acc, &m| gcd_u64(acc, m));
        if g != 1 {
            return Err(GraphError::ModuliNotCoprime);
        }
        Ok(DualGraph {
            loops_v1,
            loops_v2,
            moduli,
            k,
        })
    }

    pub fn edge_count(&self) -> usize {
        self.moduli.len()
    }

    fn connecting_range(&self) -> core::ops::Range<usize> {
        self.loops_v1 + self.loops_v2..self.moduli.len()
    }
}

/// A finite presentation of an abelian group together with a distinguished
/// class whose order is of interest.
#[derive(Clone, Debug)]
pub struct AbelianGroupPresentation {
    pub generator_count: usize,
    /// Relations as rows over the generators.
    pub relation_matrix: Vec<Vec<i128>>,
    pub distinguished_class: Vec<i128>,
}

/// Presentation of the component group over the generators `eta_{i j}`,
/// one generator per node of the semistable fibre (edge `i` of the dual
/// graph subdivides into `m_i k` nodes).
///
/// Relations: chain relations `eta_{i j} = eta_{i j-1}`; one relation per
/// vertex of the graph; and one cycle relation per independent cycle
/// (each loop, and each connecting edge paired against the last one).
/// The distinguished class is the sum over the chain of the last edge.
pub fn build_presentation(g: &DualGraph) -> AbelianGroupPresentation {
    let e = g.edge_count();
    let chain_len: Vec<usize> = g.moduli.iter().map(|&m| (m * g.k) as usize).collect();
    let offset: Vec<usize> = chain_len
        .iter()
        .scan(0usize, |acc, &l| {
            let o = *acc;
            *acc += l;
            Some(o)
        })
        .collect();
    let gen_count: usize = chain_len.iter().sum();
    let idx = |i: usize, j: usize| offset[i] + j; // j in 0..chain_len[i]

    let mut rows: Vec<Vec<i128>> = Vec::new();
    // chain relations
    for i in 0..e {
        for j in 1..chain_len[i] {
            let mut row = vec![0i128; gen_count];
            row[idx(i, j)] = 1;
            row[idx(i, j - 1)] = -1;
            rows.push(row);
        }
    }
    let conn = g.connecting_range();
    // first vertex: connecting chains start there, v1-loops leave and return
    let mut row = vec![0i128; gen_count];
    for i in conn.clone() {
        row[idx(i, 0)] += 1;
    }
    for i in 0..g.loops_v1 {
        row[idx(i, 0)] += 1;
        row[idx(i, chain_len[i] - 1)] -= 1;
    }
    rows.push(row);
    // second vertex: connecting chains end there, v2-loops leave and return
    let mut row = vec![0i128; gen_count];
    for i in conn.clone() {
        row[idx(i, chain_len[i] - 1)] -= 1;
    }
    for i in g.loops_v1..g.loops_v1 + g.loops_v2 {
        row[idx(i, 0)] += 1;
        row[idx(i, chain_len[i] - 1)] -= 1;
    }
    rows.push(row);
    // cycles: each loop closes on itself
    for i in 0..g.loops_v1 + g.loops_v2 {
        let mut row = vec![0i128; gen_count];
        for j in 0..chain_len[i] {
            row[idx(i, j)] += 1;
        }
        rows.push(row);
    }
    // cycles: each connecting edge against the last connecting edge
    let last = e - 1;
    for i in conn.clone() {
        if i == last {
            continue;
        }
        let mut row = vec![0i128; gen_count];
        for j in 0..chain_len[i] {
            row[idx(i, j)] += 1;
        }
        for j in 0..chain_len[last] {
            row[idx(last, j)] -= 1;
        }
        rows.push(row);
    }

    let mut class = vec![0i128; gen_count];
    for j in 0..chain_len[last] {
        class[idx(last, j)] = 1;
    }

    AbelianGroupPresentation {
        generator_count: gen_count,
        relation_matrix: rows,
        distinguished_class: class,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InfiniteGroup;

impl core::fmt::Display for InfiniteGroup {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "presented group is infinite")
    }
}

/// Invariant factors (greater than one) of the presented group.
/// Errors when the group is infinite, which signals a malformed graph.
pub fn component_group(p: &AbelianGroupPresentation) -> Result<Vec<u64>, InfiniteGroup> {
    let (snf, _) = presentation_snf(p);
    if snf.rank() < p.generator_count {
        return Err(InfiniteGroup);
    }
    Ok(snf.invariant_factors())
}

/// Order of the distinguished class in the presented group.
pub fn class_order(p: &AbelianGroupPresentation) -> Result<u64, InfiniteGroup> {
    let (snf, transformed) = presentation_snf(p);
    let mut order: u64 = 1;
    for (i, &w) in transformed.iter().enumerate() {
        let d = if i < snf.diag.len() { snf.diag[i] } else { 0 };
        if d == 0 {
            if w != 0 {
                return Err(InfiniteGroup);
            }
            continue;
        }
        let r = (w % d + d) % d;
        if r != 0 {
            let part = d / snf::gcd_i128(d, r);
            order = lcm_u64(order, part as u64);
        }
    }
    Ok(order)
}

/// SNF of the generators-by-relations matrix plus the transformed class.
fn presentation_snf(p: &AbelianGroupPresentation) -> (Snf, Vec<i128>) {
    let gens = p.generator_count;
    let rels = p.relation_matrix.len();
    // columns are the relations
    let mut m = vec![vec![0i128; rels]; gens];
    for (r, row) in p.relation_matrix.iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            m[c][r] = v;
        }
    }
    let snf = smith_normal_form(m);
    let w = mat_vec(&snf.left, &p.distinguished_class);
    (snf, w)
}

/// Order of the section-difference class of the fibre with the given dual
/// graph, computed through the presentation and Smith normal form.
pub fn section_class_order(g: &DualGraph) -> u64 {
    let p = build_presentation(g);
    class_order(&p).expect("component group of a connected two-vertex graph is finite")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EmptyConnectingRange;

/// Closed form for the order of the section-difference class:
/// `sum over connecting edges of lcm / m_i` with `lcm` taken over the
/// connecting multiplicities. Depends only on the connecting edges,
/// not on the ramification multiplier.
pub fn torsion_order_formula(moduli: &[u64], a: usize, b: usize) -> Result<u64, EmptyConnectingRange> {
    if a + b >= moduli.len() {
        return Err(EmptyConnectingRange);
    }
    let conn = &moduli[a + b..];
    let l = conn.iter().fold(1u64, |acc, &m| lcm_u64(acc, m));
    Ok(conn.iter().map(|&m| l / m).sum())
}

pub fn divides_torsion(order: u64, n: u64) -> bool {
    assert!(order >= 1 && n >= 1);
    n % order == 0
}

/// All integer moduli tuples compatible with a torsion order `n`:
/// length `len`, last entry 1, remaining entries in `1..=cap`, and the
/// closed-form class order dividing `n`. The two-vertex graph here has no
/// loops, so every edge is connecting.
pub fn enumerate_moduli(len: usize, n: u64, cap: u64) -> Vec<Vec<u64>> {
    assert!(len >= 2);
    let mut out = Vec::new();
    let mut current = vec![1u64; len];
    enumerate_moduli_rec(&mut current, 0, len, n, cap, &mut out);
    out
}

fn enumerate_moduli_rec(
    current: &mut Vec<u64>,
    pos: usize,
    len: usize,
    n: u64,
    cap: u64,
    out: &mut Vec<Vec<u64>>,
) {
    if pos == len - 1 {
        current[len - 1] = 1;
        let order = torsion_order_formula(current, 0, 0).unwrap();
        if divides_torsion(order, n) {
            out.push(current.clone());
        }
        return;
    }
    for m in 1..=cap {
        current[pos] = m;
        enumerate_moduli_rec(current, pos + 1, len, n, cap, out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(moduli: &[u64], a: usize, b: usize, k: u64) -> DualGraph {
        DualGraph::new(a, b, moduli.to_vec(), k).unwrap()
    }

    #[test]
    fn presentation_shape() {
        let p = build_presentation(&graph(&[1, 2, 1], 0, 0, 1));
        assert_eq!(p.generator_count, 4);
        let p2 = build_presentation(&graph(&[1, 1], 0, 0, 1));
        assert_eq!(p2.generator_count, 2);
        let p3 = build_presentation(&graph(&[1, 2, 1], 0, 0, 3));
        assert_eq!(p3.generator_count, 12);
    }

    #[test]
    fn banana_group() {
        // two vertices, two connecting edges: cyclic of order 2
        let p = build_presentation(&graph(&[1, 1], 0, 0, 1));
        assert_eq!(component_group(&p).unwrap(), vec![2]);
    }

    #[test]
    fn example_moduli_121() {
        let g = graph(&[1, 2, 1], 0, 0, 1);
        let p = build_presentation(&g);
        let factors = component_group(&p).unwrap();
        let order: u64 = factors.iter().product();
        assert_eq!(order % 5, 0);
        assert_eq!(section_class_order(&g), 5);
        assert_eq!(torsion_order_formula(&[1, 2, 1], 0, 0).unwrap(), 5);
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(torsion_order_formula(&[1, 1, 1], 0, 0).unwrap(), 3);
        assert_eq!(torsion_order_formula(&[2, 3, 6], 0, 0).unwrap(), 6);
        assert_eq!(torsion_order_formula(&[4, 4], 0, 0).unwrap(), 2);
        assert_eq!(torsion_order_formula(&[1, 1, 1, 1], 0, 0).unwrap(), 4);
        assert!(torsion_order_formula(&[1, 1], 1, 1).is_err());
    }

    #[test]
    fn k_independence() {
        for moduli in [[1u64, 2, 1].as_slice(), &[2, 3, 1], &[3, 4, 2, 1]] {
            let base = section_class_order(&graph(moduli, 0, 0, 1));
            for k in 2..=3 {
                assert_eq!(section_class_order(&graph(moduli, 0, 0, k)), base);
            }
        }
    }

    #[test]
    fn divides() {
        assert!(divides_torsion(5, 5));
        assert!(!divides_torsion(3, 5));
        assert!(divides_torsion(1, 7));
    }

    #[test]
    fn loops_contribute_their_own_cycles() {
        // one loop at each vertex plus two connecting edges, multiplicity 1:
        // the class order only sees the connecting edges
        let g = graph(&[1, 1, 1, 1], 1, 1, 1);
        assert_eq!(
            section_class_order(&g),
            torsion_order_formula(&[1, 1, 1, 1], 1, 1).unwrap()
        );
    }

    #[test]
    fn moduli_enumeration() {
        let tuples = enumerate_moduli(3, 5, 5);
        assert!(tuples.iter().all(|t| *t.last().unwrap() == 1));
        assert!(tuples.contains(&vec![1, 2, 1]));
        assert!(tuples.contains(&vec![2, 1, 1]));
        assert!(tuples.contains(&vec![3, 3, 1]));
        for t in &tuples {
            let o = torsion_order_formula(t, 0, 0).unwrap();
            assert!(divides_torsion(o, 5));
        }
    }
}
