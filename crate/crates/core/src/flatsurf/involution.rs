//! Search for the hyperelliptic involution in cylinder coordinates: a map
//! acting on every horizontal cylinder as `(xi, y) -> (c - xi, h - y)`,
//! compatible with all gluings. The centers `c` are solved from the
//! boundary-circle structure by constraint propagation.

use super::surface::Surface;
use super::trace::{CylinderData, CylinderDecomposition};
use crate::exact::{CycNum, Sign};
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;

#[derive(Clone, Debug)]
pub struct InvolutionReport {
    pub exists: bool,
    /// Per-cylinder reflection centers, when the involution exists.
    pub centers: Vec<CycNum>,
    pub fixed_points: u64,
    pub zeros_swapped: bool,
    /// Every horizontal cylinder is preserved by construction of the search.
    pub cylinders_invariant: bool,
}

impl InvolutionReport {
    fn absent() -> Self {
        InvolutionReport {
            exists: false,
            centers: Vec::new(),
            fixed_points: 0,
            zeros_swapped: false,
            cylinders_invariant: false,
        }
    }
}

#[derive(Clone, Debug)]
struct Side {
    cyl: usize,
    start: CycNum,
    len: CycNum,
}

struct Diagram<'a> {
    cylinders: &'a [CylinderData],
    /// Connections appearing on circles, densely re-indexed.
    conn_ids: Vec<usize>,
    /// For each diagram connection: its arc on a top circle (cylinder below).
    top_side: Vec<Side>,
    /// For each diagram connection: its arc on a bottom circle (cyl above).
    bottom_side: Vec<Side>,
    /// `(start_class, end_class)` per diagram connection.
    classes: Vec<(usize, usize)>,
}

fn reduce_mod(v: &CycNum, modulus: &CycNum) -> CycNum {
    let mut r = v.clone();
    while r.real_sign_unchecked() == Sign::Negative {
        r = r.add(modulus);
    }
    while r.cmp_real(modulus) != Ordering::Less {
        r = r.sub(modulus);
    }
    r
}

fn build_diagram<'a>(dec: &'a CylinderDecomposition) -> Option<Diagram<'a>> {
    let n_conn = dec.connections.len();
    let mut top_raw: Vec<Option<Side>> = alloc::vec![None; n_conn];
    let mut bottom_raw: Vec<Option<Side>> = alloc::vec![None; n_conn];
    for (ci, cyl) in dec.cylinders.iter().enumerate() {
        for arc in &cyl.top {
            let slot = &mut top_raw[arc.conn];
            if slot.is_some() {
                return None; // a connection split over two circles
            }
            *slot = Some(Side {
                cyl: ci,
                start: arc.start.clone(),
                len: arc.length.clone(),
            });
        }
        for arc in &cyl.bottom {
            let slot = &mut bottom_raw[arc.conn];
            if slot.is_some() {
                return None;
            }
            *slot = Some(Side {
                cyl: ci,
                start: arc.start.clone(),
                len: arc.length.clone(),
            });
        }
    }
    // only connections on circles take part; after interface merging some
    // connections are interior to cylinders and drop out
    let mut conn_ids = Vec::new();
    let mut top_side = Vec::new();
    let mut bottom_side = Vec::new();
    let mut classes = Vec::new();
    for c in 0..n_conn {
        match (&top_raw[c], &bottom_raw[c]) {
            (Some(t), Some(b)) => {
                conn_ids.push(c);
                top_side.push(t.clone());
                bottom_side.push(b.clone());
                classes.push((dec.connections[c].start_class, dec.connections[c].end_class));
            }
            (None, None) => {}
            _ => return None,
        }
    }
    Some(Diagram {
        cylinders: &dec.cylinders,
        conn_ids,
        top_side,
        bottom_side,
        classes,
    })
}

impl<'a> Diagram<'a> {
    /// Connection occupying `[start, start+len]` on the bottom circle of
    /// cylinder `cyl`, if exactly one arc matches.
    fn bottom_arc_at(&self, cyl: usize, start: &CycNum, len: &CycNum) -> Option<usize> {
        for (conn, side) in self.bottom_side.iter().enumerate() {
            if side.cyl == cyl && &side.start == start && &side.len == len {
                return Some(conn);
            }
        }
        None
    }

    /// Attempts the involution with the given center on the seed cylinder.
    fn try_centers(&self, seed_center: CycNum) -> Option<(Vec<CycNum>, Vec<usize>)> {
        let n_cyl = self.cylinders.len();
        let mut centers: Vec<Option<CycNum>> = alloc::vec![None; n_cyl];
        centers[0] = Some(reduce_mod(&seed_center, &self.cylinders[0].width));
        let mut pairing: Vec<Option<usize>> = alloc::vec![None; self.top_side.len()];
        let mut queue = alloc::vec![0usize];
        let mut processed = alloc::vec![false; n_cyl];
        while let Some(ci) = queue.pop() {
            if processed[ci] {
                continue;
            }
            processed[ci] = true;
            let c = centers[ci].clone().unwrap();
            let w = &self.cylinders[ci].width;
            // every connection with its below side on this cylinder maps to
            // a connection on the bottom circle
            for (s, side) in self.top_side.iter().enumerate() {
                if side.cyl != ci {
                    continue;
                }
                let image_start = reduce_mod(&c.sub(&side.start).sub(&side.len), w);
                let s2 = self.bottom_arc_at(ci, &image_start, &side.len)?;
                if let Some(prev) = pairing[s] {
                    if prev != s2 {
                        return None;
                    }
                } else {
                    pairing[s] = Some(s2);
                }
                // cross-cylinder constraint: above side of s, top side of s2
                let above = &self.bottom_side[s];
                let s2_top = &self.top_side[s2];
                if s2_top.cyl != above.cyl {
                    return None;
                }
                let j = above.cyl;
                let wj = &self.cylinders[j].width;
                let cj = reduce_mod(&above.start.add(&s2_top.start).add(&side.len), wj);
                match &centers[j] {
                    Some(prev) => {
                        if prev != &cj {
                            return None;
                        }
                    }
                    None => {
                        centers[j] = Some(cj);
                        queue.push(j);
                    }
                }
                if !processed[j] {
                    queue.push(j);
                }
            }
        }
        // connected surface: every cylinder must have been reached
        let centers: Option<Vec<CycNum>> = centers.into_iter().collect();
        let centers = centers?;
        let pairing: Option<Vec<usize>> = pairing.into_iter().collect();
        let pairing = pairing?;
        // involution check on connections
        for (s, &s2) in pairing.iter().enumerate() {
            if pairing[s2] != s {
                return None;
            }
        }
        // full verification: every top arc maps exactly onto the recorded
        // bottom arc of its image
        for (s, side) in self.top_side.iter().enumerate() {
            let c = &centers[side.cyl];
            let w = &self.cylinders[side.cyl].width;
            let image_start = reduce_mod(&c.sub(&side.start).sub(&side.len), w);
            let img = self.bottom_arc_at(side.cyl, &image_start, &side.len)?;
            if img != pairing[s] {
                return None;
            }
        }
        Some((centers, pairing))
    }
}

/// Searches for the involution; reports fixed points and whether the two
/// zeros are exchanged.
pub fn find_involution(s: &Surface, dec: &CylinderDecomposition) -> InvolutionReport {
    let diagram = match build_diagram(dec) {
        Some(d) => d,
        None => return InvolutionReport::absent(),
    };
    if dec.cylinders.is_empty() {
        return InvolutionReport::absent();
    }
    // candidate centers for the first cylinder from junction alignment
    let first = &dec.cylinders[0];
    let mut candidates: Vec<CycNum> = Vec::new();
    for a in &first.top {
        for b in &first.bottom {
            let c = reduce_mod(&a.start.add(&b.start), &first.width);
            if !candidates.contains(&c) {
                candidates.push(c);
            }
        }
    }
    for cand in candidates {
        if let Some((centers, pairing)) = diagram.try_centers(cand) {
            // class map induced on vertex classes
            let mut class_map: BTreeMap<usize, usize> = BTreeMap::new();
            let mut consistent = true;
            for (s, &s2) in pairing.iter().enumerate() {
                let (a_start, a_end) = diagram.classes[s];
                let (b_start, b_end) = diagram.classes[s2];
                // the involution reverses: start of s maps to end of its image
                for (from, to) in [(a_start, b_end), (a_end, b_start)] {
                    match class_map.get(&from) {
                        Some(&prev) if prev != to => {
                            consistent = false;
                        }
                        _ => {
                            class_map.insert(from, to);
                        }
                    }
                }
            }
            if !consistent {
                continue;
            }
            // fixed points: two per cylinder interior, one per self-paired
            // connection, one per fixed junction class
            let mut fixed = 2 * dec.cylinders.len() as u64;
            for (s, &s2) in pairing.iter().enumerate() {
                if s == s2 {
                    fixed += 1;
                }
            }
            let mut fixed_classes: Vec<usize> = class_map
                .iter()
                .filter(|&(k, v)| k == v)
                .map(|(&k, _)| k)
                .collect();
            fixed_classes.dedup();
            fixed += fixed_classes.len() as u64;
            // zeros swapped
            let turns = s.cone_turns();
            let zeros: Vec<usize> = turns
                .iter()
                .enumerate()
                .filter(|(_, &t)| t >= 2)
                .map(|(i, _)| i)
                .collect();
            let zeros_swapped = zeros.len() == 2
                && class_map.get(&zeros[0]) == Some(&zeros[1])
                && class_map.get(&zeros[1]) == Some(&zeros[0]);
            return InvolutionReport {
                exists: true,
                centers,
                fixed_points: fixed,
                zeros_swapped,
                cylinders_invariant: true,
            };
        }
    }
    InvolutionReport::absent()
}
