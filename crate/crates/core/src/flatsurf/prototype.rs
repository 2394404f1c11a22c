//! The two-zero staircase surface: `g` horizontal cylinders, the first and
//! last carrying a self-glued boundary edge, consecutive cylinders joined
//! by a pair of slits of equal width. Gluing positions are chosen so the
//! reflection `xi -> -xi` on every cylinder is an isometry of the surface.
//!
//! Conventions, with `u_1 = b_1 - w_1` and `u_g = b_g - w_{g-1}`:
//! cylinder 1 has its self-glued edge centered at 0 on both circles;
//! cylinder `i` (i >= 2) places the slit from below at
//! `[t_i - w/2, t_i + w/2]` on its bottom circle, `w = w_{i-1}`, and the
//! mirrored positions on its top circle.

use super::surface::{EdgeRef, Point, Polygon, Surface};
use super::trace::CylinderDecomposition;
use super::InvolutionReport;
use crate::exact::{CycNum, Rat, Sign};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

#[derive(Clone, Debug)]
pub struct PrototypeParams {
    pub genus: usize,
    /// Cylinder heights `h_1..h_g`, `h_1 = 1`.
    pub heights: Vec<CycNum>,
    /// Cylinder widths `b_1..b_g`, `b_1 = 1 + w_1`.
    pub widths: Vec<CycNum>,
    /// Slit widths `w_1..w_{g-1}`.
    pub slit_widths: Vec<CycNum>,
    /// Twists `t_2..t_g`, reduced into `[0, b_i)`.
    pub twists: Vec<CycNum>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrototypeError {
    BadDimensions,
    NonRealParameter,
    NonPositiveParameter,
    NormalizationViolated,
    SlitExceedsWidth,
    ChainMismatch,
}

impl core::fmt::Display for PrototypeError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            PrototypeError::BadDimensions => write!(f, "parameter lists have wrong lengths"),
            PrototypeError::NonRealParameter => write!(f, "parameters must be real"),
            PrototypeError::NonPositiveParameter => write!(f, "lengths must be positive"),
            PrototypeError::NormalizationViolated => {
                write!(f, "normalization requires h_1 = 1 and b_1 = 1 + w_1")
            }
            PrototypeError::SlitExceedsWidth => write!(f, "slit width must stay below the cylinder widths"),
            PrototypeError::ChainMismatch => {
                write!(f, "middle cylinders must satisfy b_i = w_(i-1) + w_i")
            }
        }
    }
}

impl PrototypeParams {
    pub fn new(
        genus: usize,
        heights: Vec<CycNum>,
        widths: Vec<CycNum>,
        slit_widths: Vec<CycNum>,
        twists: Vec<CycNum>,
    ) -> Result<Self, PrototypeError> {
        if genus < 2
            || heights.len() != genus
            || widths.len() != genus
            || slit_widths.len() != genus - 1
            || twists.len() != genus - 1
        {
            return Err(PrototypeError::BadDimensions);
        }
        for v in heights.iter().chain(widths.iter()).chain(slit_widths.iter()) {
            if !v.is_real() {
                return Err(PrototypeError::NonRealParameter);
            }
            if v.real_sign_unchecked() != Sign::Positive {
                return Err(PrototypeError::NonPositiveParameter);
            }
        }
        for t in &twists {
            if !t.is_real() {
                return Err(PrototypeError::NonRealParameter);
            }
        }
        if !heights[0].is_one() {
            return Err(PrototypeError::NormalizationViolated);
        }
        if widths[0] != CycNum::one().add(&slit_widths[0]) {
            return Err(PrototypeError::NormalizationViolated);
        }
        // slit consistency along the chain
        for i in 1..genus - 1 {
            // width of cylinder i+1 (0-based i) splits as w_(i-1) + w_i
            let expect = slit_widths[i - 1].add(&slit_widths[i]);
            if widths[i] != expect {
                return Err(PrototypeError::ChainMismatch);
            }
        }
        let u_last = widths[genus - 1].sub(&slit_widths[genus - 2]);
        if u_last.real_sign_unchecked() != Sign::Positive {
            return Err(PrototypeError::SlitExceedsWidth);
        }
        for i in 0..genus - 1 {
            if slit_widths[i].cmp_real(&widths[i]) != Ordering::Less
                || slit_widths[i].cmp_real(&widths[i + 1]) != Ordering::Less
            {
                return Err(PrototypeError::SlitExceedsWidth);
            }
        }
        let twists = twists
            .iter()
            .enumerate()
            .map(|(i, t)| reduce_mod(t, &widths[i + 1]))
            .collect();
        Ok(PrototypeParams {
            genus,
            heights,
            widths,
            slit_widths,
            twists,
        })
    }

    pub fn first_self_width(&self) -> CycNum {
        self.widths[0].sub(&self.slit_widths[0])
    }

    pub fn last_self_width(&self) -> CycNum {
        self.widths[self.genus - 1].sub(&self.slit_widths[self.genus - 2])
    }
}

fn half() -> Rat {
    Rat::new(1.into(), 2.into())
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

/// One named interval of a boundary circle, positions modulo the width.
#[derive(Clone, Debug)]
struct Interval {
    name: GlueName,
    start: CycNum,
    len: CycNum,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum GlueName {
    /// Self-glued edge of the first cylinder.
    WFirst,
    /// Self-glued edge of the last cylinder.
    WLast,
    /// Slit from the top of cylinder `i` to the bottom of `i+1` (0-based i).
    SlitUp(usize),
    /// Slit from the bottom of cylinder `i` to the top of `i+1`.
    SlitDown(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct CircleId {
    cyl: usize,
    top: bool,
}

/// Builds the staircase surface from validated parameters.
pub fn build_prototype(p: &PrototypeParams) -> Result<Surface, PrototypeError> {
    let g = p.genus;
    let b = &p.widths;
    let w = &p.slit_widths;
    let u1 = p.first_self_width();
    let ug = p.last_self_width();
    let two_inv = half();

    // circle partitions
    let mut circles: Vec<(CircleId, Vec<Interval>)> = Vec::new();
    for cyl in 0..g {
        let (top, bottom): (Vec<Interval>, Vec<Interval>) = if cyl == 0 {
            let wu = u1.scale(&two_inv);
            let top = vec![
                Interval {
                    name: GlueName::WFirst,
                    start: wu.neg(),
                    len: u1.clone(),
                },
                Interval {
                    name: GlueName::SlitUp(0),
                    start: wu.clone(),
                    len: w[0].clone(),
                },
            ];
            let bottom = vec![
                Interval {
                    name: GlueName::WFirst,
                    start: wu.neg(),
                    len: u1.clone(),
                },
                Interval {
                    name: GlueName::SlitDown(0),
                    start: wu.clone(),
                    len: w[0].clone(),
                },
            ];
            (top, bottom)
        } else {
            let t = &p.twists[cyl - 1];
            let wh = w[cyl - 1].scale(&two_inv);
            let mut bottom = vec![Interval {
                name: GlueName::SlitUp(cyl - 1),
                start: t.sub(&wh),
                len: w[cyl - 1].clone(),
            }];
            let mut top = vec![Interval {
                name: GlueName::SlitDown(cyl - 1),
                start: t.neg().sub(&wh),
                len: w[cyl - 1].clone(),
            }];
            if cyl == g - 1 {
                bottom.push(Interval {
                    name: GlueName::WLast,
                    start: t.add(&wh),
                    len: ug.clone(),
                });
                top.push(Interval {
                    name: GlueName::WLast,
                    start: t.neg().add(&wh),
                    len: ug.clone(),
                });
            } else {
                bottom.push(Interval {
                    name: GlueName::SlitDown(cyl),
                    start: t.add(&wh),
                    len: w[cyl].clone(),
                });
                top.push(Interval {
                    name: GlueName::SlitUp(cyl),
                    start: t.neg().add(&wh),
                    len: w[cyl].clone(),
                });
            }
            (top, bottom)
        };
        circles.push((CircleId { cyl, top: false }, bottom));
        circles.push((CircleId { cyl, top: true }, top));
    }

    // gluing sides: for every name, the two (circle, interval) sides
    let mut sides: Vec<(GlueName, Vec<(CircleId, CycNum, CycNum)>)> = Vec::new();
    for (cid, intervals) in &circles {
        for iv in intervals {
            let entry = sides.iter_mut().find(|(n, _)| *n == iv.name);
            let rec = (*cid, iv.start.clone(), iv.len.clone());
            match entry {
                Some((_, v)) => v.push(rec),
                None => sides.push((iv.name, vec![rec])),
            }
        }
    }
    for (_, v) in &sides {
        assert_eq!(v.len(), 2, "every interval glues to exactly one partner");
    }

    // breakpoints per circle: interval starts, the cut corner, and pullbacks
    // of the partner's breakpoints through every gluing
    let cut = |cyl: usize| b[cyl].scale(&half()).neg(); // plane x starts here
    let mut primary: Vec<(CircleId, Vec<CycNum>)> = circles
        .iter()
        .map(|(cid, intervals)| {
            let mut pts: Vec<CycNum> = intervals.iter().map(|iv| iv.start.clone()).collect();
            pts.push(cut(cid.cyl));
            (*cid, pts)
        })
        .collect();
    let find_circle =
        |pr: &Vec<(CircleId, Vec<CycNum>)>, cid: CircleId| -> usize {
            pr.iter().position(|(c, _)| *c == cid).unwrap()
        };
    let mut pulled: Vec<(usize, CycNum)> = Vec::new();
    for (_, two) in &sides {
        let (ca, sa, la) = &two[0];
        let (cb, sb, _lb) = &two[1];
        let ia = find_circle(&primary, *ca);
        let ib = find_circle(&primary, *cb);
        // points of circle b inside [sb, sb+l] pull to circle a and back
        for (from, to, s_from, s_to) in [(ib, ia, sb, sa), (ia, ib, sa, sb)] {
            let width_from = &b[primary[from].0.cyl];
            let width_to = &b[primary[to].0.cyl];
            let points = primary[from].1.clone();
            for pt in points {
                let off = reduce_mod(&pt.sub(s_from), width_from);
                if off.cmp_real(la) == Ordering::Less {
                    pulled.push((to, reduce_mod(&s_to.add(&off), width_to)));
                }
            }
        }
    }
    for (ci, pt) in pulled {
        primary[ci].1.push(pt);
    }
    // normalize into plane coordinates and sort
    let mut breakpoints: Vec<(CircleId, Vec<CycNum>)> = Vec::new();
    for (cid, pts) in &primary {
        let s0 = cut(cid.cyl);
        let width = &b[cid.cyl];
        let mut xs: Vec<CycNum> = pts
            .iter()
            .map(|p| s0.add(&reduce_mod(&p.sub(&s0), width)))
            .collect();
        xs.sort_by(|a, c| a.cmp_real(c));
        xs.dedup();
        breakpoints.push((*cid, xs));
    }

    // polygons: one rectangle per cylinder with subdivided top and bottom
    let mut y_base = CycNum::zero();
    let mut polygons: Vec<Polygon> = Vec::new();
    // edge lookup: for each circle, the (edge index, x0, x1) list in order
    let mut circle_edges: Vec<(CircleId, Vec<(usize, CycNum, CycNum)>)> = Vec::new();
    for cyl in 0..g {
        let s0 = cut(cyl);
        let s1 = s0.add(&b[cyl]);
        let y0 = y_base.clone();
        let y1 = y_base.add(&p.heights[cyl]);
        let bot = &breakpoints[find_circle(&primary, CircleId { cyl, top: false })].1;
        let top = &breakpoints[find_circle(&primary, CircleId { cyl, top: true })].1;
        let mut verts: Vec<Point> = Vec::new();
        let mut bot_edges = Vec::new();
        let mut top_edges = Vec::new();
        // bottom, left to right
        for x in bot.iter() {
            verts.push(Point::new(x.clone(), y0.clone()));
        }
        verts.push(Point::new(s1.clone(), y0.clone()));
        // bottom edges: between consecutive vertices
        for i in 0..bot.len() {
            let x0 = bot[i].clone();
            let x1 = if i + 1 < bot.len() {
                bot[i + 1].clone()
            } else {
                s1.clone()
            };
            bot_edges.push((i, x0, x1));
        }
        let right_edge = bot.len();
        verts.push(Point::new(s1.clone(), y1.clone()));
        // top, right to left
        let top_rev: Vec<CycNum> = top.iter().rev().cloned().collect();
        let mut idx = right_edge + 1;
        // first top edge: from (s1, y1) to the last breakpoint
        let mut prev_x = s1.clone();
        for x in &top_rev {
            // edge from prev_x to x at height y1
            top_edges.push((idx, x.clone(), prev_x.clone()));
            verts.push(Point::new(x.clone(), y1.clone()));
            prev_x = x.clone();
            idx += 1;
        }
        // the leftmost top breakpoint is s0 (the cut); the final edge is the
        // left side back down to (s0, y0)
        assert!(prev_x == s0, "cut corner must be a top breakpoint");
        polygons.push(Polygon { vertices: verts });
        circle_edges.push((CircleId { cyl, top: false }, bot_edges));
        circle_edges.push((CircleId { cyl, top: true }, top_edges));
        y_base = y1;
    }

    // pairings
    let mut pairs: Vec<(EdgeRef, EdgeRef)> = Vec::new();
    // vertical sides: right edge index = bot.len(); left edge = last
    for cyl in 0..g {
        let nv = polygons[cyl].len();
        let bot_count = circle_edges
            .iter()
            .find(|(cid, _)| *cid == CircleId { cyl, top: false })
            .unwrap()
            .1
            .len();
        let right = bot_count;
        let left = nv - 1;
        pairs.push((
            EdgeRef { poly: cyl, edge: right },
            EdgeRef { poly: cyl, edge: left },
        ));
    }
    // horizontal sub-edges through the gluings
    let circle_of = |cid: CircleId| -> &Vec<(usize, CycNum, CycNum)> {
        &circle_edges
            .iter()
            .find(|(c, _)| *c == cid)
            .unwrap()
            .1
    };
    let mut used: Vec<(usize, usize)> = Vec::new();
    for (_, two) in &sides {
        let (ca, sa, la) = &two[0];
        let (cb, sb, _) = &two[1];
        let wa = &b[ca.cyl];
        let wb = &b[cb.cyl];
        let edges_a = circle_of(*ca);
        for (ea, x0, x1) in edges_a {
            // offset of this sub-edge inside interval a
            let off = reduce_mod(&x0.sub(sa), wa);
            if off.cmp_real(la) != Ordering::Less {
                continue;
            }
            let len = x1.sub(x0);
            // the image sub-edge on circle b
            let target_start = sb.add(&off);
            let cutb = cut(cb.cyl);
            let tx = cutb.add(&reduce_mod(&target_start.sub(&cutb), wb));
            let edges_b = circle_of(*cb);
            let eb = edges_b
                .iter()
                .find(|(_, bx0, bx1)| *bx0 == tx && bx1.sub(bx0) == len)
                .unwrap_or_else(|| panic!("no matching sub-edge for gluing"));
            let a_ref = EdgeRef { poly: ca.cyl, edge: *ea };
            let b_ref = EdgeRef { poly: cb.cyl, edge: eb.0 };
            let key = if (a_ref.poly, a_ref.edge) <= (b_ref.poly, b_ref.edge) {
                (a_ref, b_ref)
            } else {
                (b_ref, a_ref)
            };
            if !used.contains(&(key.0.poly * 10_000 + key.0.edge, key.1.poly * 10_000 + key.1.edge))
            {
                used.push((key.0.poly * 10_000 + key.0.edge, key.1.poly * 10_000 + key.1.edge));
                pairs.push(key);
            }
        }
    }

    Surface::new(polygons, pairs).map_err(|_| PrototypeError::ChainMismatch)
}

/// The translation surface of the regular decagon with opposite sides
/// identified, normalized so the wide horizontal cylinder has height 1 and
/// its self-glued edge has length 1. All coordinates lie in the real
/// subfield of the fifth cyclotomic field.
pub fn decagon_surface() -> Surface {
    let sqrt5 = CycNum::root(5, 1)
        .add(&CycNum::root(5, 4))
        .sub(&CycNum::root(5, 2))
        .sub(&CycNum::root(5, 3));
    let phi = CycNum::one().add(&sqrt5).scale(&half());
    let q = |num: &CycNum, d: i64| num.scale(&Rat::new(1.into(), d.into()));
    let phim1 = phi.sub(&CycNum::one());
    // vertices counterclockwise starting at the top right
    let pts = [
        (q(&phim1, 4), phi.clone()),                 // A
        (q(&phim1, 4).neg(), phi.clone()),           // B
        (q(&phi, 4).neg(), CycNum::one()),           // C
        (CycNum::from_rat(Rat::new((-1).into(), 2.into())), CycNum::zero()), // D
        (q(&phi, 4).neg(), CycNum::from_int(-1)),    // E
        (q(&phim1, 4).neg(), phi.neg()),             // F
        (q(&phim1, 4), phi.neg()),                   // G
        (q(&phi, 4), CycNum::from_int(-1)),          // H
        (CycNum::from_rat(Rat::new(1.into(), 2.into())), CycNum::zero()),   // I
        (q(&phi, 4), CycNum::one()),                 // J
    ];
    let polygon = Polygon {
        vertices: pts.iter().map(|(x, y)| Point::new(x.clone(), y.clone())).collect(),
    };
    let e = |edge| EdgeRef { poly: 0, edge };
    Surface::new(
        vec![polygon],
        vec![(e(0), e(5)), (e(1), e(6)), (e(2), e(7)), (e(3), e(8)), (e(4), e(9))],
    )
    .expect("decagon gluing is valid")
}

/// Merges a set of circle arcs into one contiguous interval (allowing a
/// wrap through zero); returns `(start, total length)` or `None` when the
/// arcs do not form a single interval.
fn merged_interval(
    arcs: &[(CycNum, CycNum)],
    width: &CycNum,
) -> Option<(CycNum, CycNum)> {
    if arcs.is_empty() {
        return None;
    }
    let mut sorted: Vec<(CycNum, CycNum)> = arcs.to_vec();
    sorted.sort_by(|a, b| a.0.cmp_real(&b.0));
    // find a gap: the arc whose predecessor does not touch it
    let n = sorted.len();
    let mut start_idx = None;
    for i in 0..n {
        let prev = &sorted[(i + n - 1) % n];
        let end = reduce_mod(&prev.0.add(&prev.1), width);
        if end != sorted[i].0 {
            if start_idx.is_some() {
                return None; // two gaps: not a single interval
            }
            start_idx = Some(i);
        }
    }
    let total = sorted
        .iter()
        .fold(CycNum::zero(), |acc, (_, l)| acc.add(l));
    match start_idx {
        Some(i) => Some((sorted[i].0.clone(), total)),
        None => {
            // covers the whole circle
            if total == *width {
                Some((sorted[0].0.clone(), total))
            } else {
                None
            }
        }
    }
}

/// Reads staircase parameters back from a decomposed surface with a known
/// involution, using the given end cylinder as cylinder 1. Returns `None`
/// when the surface does not fit the convention (for instance when the
/// self-glued edge of cylinder 1 is not centered in the reflection gauge).
pub fn extract_prototype(
    dec: &CylinderDecomposition,
    inv: &InvolutionReport,
    first: usize,
) -> Option<PrototypeParams> {
    if !inv.exists {
        return None;
    }
    let cyls = &dec.cylinders;
    let g = cyls.len();
    if g < 2 {
        return None;
    }
    let n_conn = dec.connections.len();
    let mut below = vec![usize::MAX; n_conn];
    let mut above = vec![usize::MAX; n_conn];
    let mut arc_on_top: Vec<Option<(CycNum, CycNum)>> = vec![None; n_conn];
    let mut arc_on_bottom: Vec<Option<(CycNum, CycNum)>> = vec![None; n_conn];
    for (ci, c) in cyls.iter().enumerate() {
        for arc in &c.top {
            below[arc.conn] = ci;
            arc_on_top[arc.conn] = Some((arc.start.clone(), arc.length.clone()));
        }
        for arc in &c.bottom {
            above[arc.conn] = ci;
            arc_on_bottom[arc.conn] = Some((arc.start.clone(), arc.length.clone()));
        }
    }
    let on_circles = |s: usize| below[s] != usize::MAX && above[s] != usize::MAX;
    // end cylinders carry self-glued pieces
    let self_cyls: Vec<usize> = (0..g)
        .filter(|&c| (0..n_conn).any(|s| on_circles(s) && below[s] == c && above[s] == c))
        .collect();
    if !self_cyls.contains(&first) {
        return None;
    }
    // chain order by slit adjacency
    let mut order = vec![first];
    while order.len() < g {
        let cur = *order.last().unwrap();
        let mut next = None;
        for s in 0..n_conn {
            if !on_circles(s) || below[s] == above[s] {
                continue;
            }
            let (x, y) = (below[s], above[s]);
            let other = if x == cur {
                y
            } else if y == cur {
                x
            } else {
                continue;
            };
            if !order.contains(&other) {
                next = Some(other);
            }
        }
        order.push(next?);
    }
    let heights: Vec<CycNum> = order.iter().map(|&i| cyls[i].height.clone()).collect();
    let widths: Vec<CycNum> = order.iter().map(|&i| cyls[i].width.clone()).collect();
    // slit widths: the connections between consecutive cylinders come in two
    // slits of equal total length
    let mut slit_widths = Vec::new();
    let mut up_arcs: Vec<Vec<(CycNum, CycNum)>> = Vec::new();
    for k in 0..g - 1 {
        let (i, j) = (order[k], order[k + 1]);
        let mut total = CycNum::zero();
        let mut arcs_on_bottom_of_next = Vec::new();
        for s in 0..n_conn {
            if !on_circles(s) || below[s] == above[s] {
                continue;
            }
            if below[s] == i && above[s] == j {
                // upward slit piece
                total = total.add(&dec.connections[s].length);
                arcs_on_bottom_of_next.push(arc_on_bottom[s].clone()?);
            }
        }
        if arcs_on_bottom_of_next.is_empty() {
            return None;
        }
        slit_widths.push(total);
        up_arcs.push(arcs_on_bottom_of_next);
    }
    // gauge check on the first cylinder: the merged self-glued interval on
    // the top circle must be centered at 0 or at half the width in the
    // reflection gauge
    let c_first = &inv.centers[first];
    let self_arcs_top: Vec<(CycNum, CycNum)> = (0..n_conn)
        .filter(|&s| on_circles(s) && below[s] == first && above[s] == first)
        .filter_map(|s| arc_on_top[s].clone())
        .collect();
    let (a, l) = merged_interval(&self_arcs_top, &cyls[first].width)?;
    let m = a.add(&l.scale(&half())).sub(&c_first.scale(&half()));
    let m = reduce_mod(&m, &cyls[first].width);
    let half_w = cyls[first].width.scale(&half());
    if !(m.is_zero() || m == half_w) {
        return None;
    }
    // twists: center of the incoming slit interval on each bottom circle
    let mut twists = Vec::new();
    for k in 1..g {
        let cyl = order[k];
        let width = &cyls[cyl].width;
        let (start, len) = merged_interval(&up_arcs[k - 1], width)?;
        let t = start
            .add(&len.scale(&half()))
            .sub(&inv.centers[cyl].scale(&half()));
        // canonical representative modulo half the width
        let t = reduce_mod(&t, &width.scale(&half()));
        twists.push(t);
    }
    PrototypeParams::new(heights.len(), heights, widths, slit_widths, twists).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_i64;

    fn rational_params(g: usize) -> PrototypeParams {
        // h = (1, 1, ...), w_i = 1, b_1 = 2, middle b_i = 2, b_g = 1 + u
        let one = CycNum::one();
        let heights = vec![one.clone(); g];
        let mut widths = vec![CycNum::from_int(2); g - 1];
        widths.push(CycNum::from_rat(rat_i64(5, 2))); // u_g = 3/2
        let slit_widths = vec![one.clone(); g - 1];
        let twists = vec![CycNum::zero(); g - 1];
        PrototypeParams::new(g, heights, widths, slit_widths, twists).unwrap()
    }

    #[test]
    fn params_validation() {
        assert!(PrototypeParams::new(
            2,
            vec![CycNum::one(), CycNum::one()],
            vec![CycNum::from_int(2), CycNum::from_int(3)],
            vec![CycNum::one()],
            vec![CycNum::zero()],
        )
        .is_ok());
        // h_1 must be 1
        assert!(matches!(
            PrototypeParams::new(
                2,
                vec![CycNum::from_int(2), CycNum::one()],
                vec![CycNum::from_int(2), CycNum::from_int(3)],
                vec![CycNum::one()],
                vec![CycNum::zero()],
            ),
            Err(PrototypeError::NormalizationViolated)
        ));
        // slit exceeding the last width
        assert!(matches!(
            PrototypeParams::new(
                2,
                vec![CycNum::one(), CycNum::one()],
                vec![CycNum::from_int(2), CycNum::one()],
                vec![CycNum::one()],
                vec![CycNum::zero()],
            ),
            Err(PrototypeError::SlitExceedsWidth)
        ));
    }

    #[test]
    fn genus_two_prototype_shape() {
        let p = rational_params(2);
        let s = build_prototype(&p).unwrap();
        assert_eq!(s.genus(), 2);
        assert_eq!(s.zero_orders(), vec![1, 1]);
        let area = s.area();
        // b1*h1 + b2*h2 = 2 + 5/2
        assert_eq!(area, CycNum::from_rat(rat_i64(9, 2)));
    }

    #[test]
    fn genus_three_prototype_shape() {
        let p = rational_params(3);
        let s = build_prototype(&p).unwrap();
        assert_eq!(s.genus(), 3);
        assert_eq!(s.zero_orders(), vec![2, 2]);
    }

    #[test]
    fn decagon_basic_invariants() {
        let s = decagon_surface();
        assert_eq!(s.genus(), 2);
        assert_eq!(s.zero_orders(), vec![1, 1]);
        // height of the wide cylinder is 1 by normalization
        let phi_sq = {
            let sqrt5 = CycNum::root(5, 1)
                .add(&CycNum::root(5, 4))
                .sub(&CycNum::root(5, 2))
                .sub(&CycNum::root(5, 3));
            let phi = CycNum::one().add(&sqrt5).scale(&half());
            phi.mul(&phi)
        };
        // area = b1 h1 + b2 h2 with normalized decagon data:
        // (phi+2)/2 * 1 + sqrt5/2 * (phi - 1) = ... checked numerically below
        let area = s.area();
        assert!(area.is_real());
        let encl = area.real_enclosure(64);
        // phi^2 + ... the numeric value: (phi+2)/2 + (sqrt5/2)(phi-1)
        // = 1.809 + 1.118*0.618 = 2.5
        let lo = crate::exact::rat_i64(2, 1);
        let hi = crate::exact::rat_i64(3, 1);
        assert!(encl.lo > lo && encl.hi < hi);
        let _ = phi_sq;
    }
}
