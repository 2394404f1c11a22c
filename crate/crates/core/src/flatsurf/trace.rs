//! Horizontal separatrix tracing and cylinder decomposition with exact
//! arithmetic. The vertical direction is handled by rotating the surface a
//! quarter turn and reusing the horizontal machinery.
//!
//! The decomposition pipeline: trace all saddle connections in the
//! direction; cut every polygon into horizontal strips at the heights of
//! vertices and chords; strips connect sideways through edge crossings and
//! vertically through open interfaces, and the resulting components are the
//! cylinders. Positions on boundary circles are exact, computed from the
//! per-strip offset of the cylinder coordinate.

use super::geometry::IntersectionMatrix;
use super::surface::{cross_sign, sector_contains, Direction, EdgeRef, Point, Surface};
use crate::exact::{CycNum, Rat, Sign};
use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceError {
    /// A separatrix failed to close within the step budget: the direction
    /// is not recognisably periodic.
    BudgetExhausted,
}

impl core::fmt::Display for TraceError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            TraceError::BudgetExhausted => write!(f, "separatrix did not close within the budget"),
        }
    }
}

/// One maximal horizontal segment of a saddle connection inside a polygon.
#[derive(Clone, Debug)]
pub struct ChordSeg {
    pub poly: usize,
    pub y: CycNum,
    pub x0: CycNum,
    pub x1: CycNum,
}

/// A saddle connection in the traced direction.
#[derive(Clone, Debug)]
pub struct Connection {
    pub segs: Vec<ChordSeg>,
    /// Vertex classes at the left and right endpoints.
    pub start_class: usize,
    pub end_class: usize,
    pub length: CycNum,
    pub on_boundary: bool,
}

/// An arc of a cylinder boundary circle covered by one saddle connection.
#[derive(Clone, Debug)]
pub struct CircleArc {
    pub conn: usize,
    /// Start position in the cylinder coordinate, in `[0, width)`.
    pub start: CycNum,
    pub length: CycNum,
}

#[derive(Clone, Debug)]
pub struct CylinderData {
    pub width: CycNum,
    pub height: CycNum,
    pub modulus: CycNum,
    /// Arcs of the top boundary circle.
    pub top: Vec<CircleArc>,
    /// Arcs of the bottom boundary circle, in the same coordinate.
    pub bottom: Vec<CircleArc>,
    /// Core curve: horizontal segments at the mid-height of the lowest ring.
    pub core: Vec<ChordSeg>,
}

#[derive(Clone, Debug)]
pub struct CylinderDecomposition {
    pub direction: Direction,
    pub cylinders: Vec<CylinderData>,
    pub connections: Vec<Connection>,
}

impl CylinderDecomposition {
    pub fn total_area(&self) -> CycNum {
        self.cylinders
            .iter()
            .fold(CycNum::zero(), |acc, c| acc.add(&c.width.mul(&c.height)))
    }

    pub fn moduli(&self) -> Vec<CycNum> {
        self.cylinders.iter().map(|c| c.modulus.clone()).collect()
    }
}

fn half() -> Rat {
    Rat::new(1.into(), 2.into())
}

struct Strip {
    poly: usize,
    y0: CycNum,
    y1: CycNum,
    left: usize,
    right: usize,
}

impl Strip {
    fn x_on_edge(&self, s: &Surface, edge: usize, y: &CycNum) -> CycNum {
        let p = &s.polygons[self.poly];
        let a = p.vertex(edge);
        let b = p.vertex(edge + 1);
        let dy = b.y.sub(&a.y);
        let t = y.sub(&a.y).div(&dy).expect("edge not horizontal");
        a.x.add(&b.x.sub(&a.x).mul(&t))
    }

    fn left_x(&self, s: &Surface, y: &CycNum) -> CycNum {
        self.x_on_edge(s, self.left, y)
    }

    fn right_x(&self, s: &Surface, y: &CycNum) -> CycNum {
        self.x_on_edge(s, self.right, y)
    }

    fn mid_y(&self) -> CycNum {
        self.y0.add(&self.y1).scale(&half())
    }

    fn width_at_mid(&self, s: &Surface) -> CycNum {
        let m = self.mid_y();
        self.right_x(s, &m).sub(&self.left_x(s, &m))
    }

    fn height(&self) -> CycNum {
        self.y1.sub(&self.y0)
    }
}

/// Tracing context.
struct Tracer<'a> {
    s: &'a Surface,
    budget: usize,
}

impl<'a> Tracer<'a> {
    fn trace_ray(
        &self,
        mut poly: usize,
        mut start: Point,
    ) -> Result<(Vec<ChordSeg>, usize), TraceError> {
        let mut segs = Vec::new();
        for _ in 0..self.budget {
            let p = &self.s.polygons[poly];
            let n = p.len();
            let mut best: Option<(CycNum, usize)> = None;
            for e in 0..n {
                let a = p.vertex(e);
                let b = p.vertex(e + 1);
                if a.y == b.y {
                    continue;
                }
                let (ylo, yhi) = if a.y.cmp_real(&b.y) == Ordering::Less {
                    (&a.y, &b.y)
                } else {
                    (&b.y, &a.y)
                };
                if ylo.cmp_real(&start.y) == Ordering::Greater
                    || yhi.cmp_real(&start.y) == Ordering::Less
                {
                    continue;
                }
                let dy = b.y.sub(&a.y);
                let t = start.y.sub(&a.y).div(&dy).unwrap();
                let x = a.x.add(&b.x.sub(&a.x).mul(&t));
                if x.cmp_real(&start.x) == Ordering::Greater {
                    let better = match &best {
                        None => true,
                        Some((bx, _)) => x.cmp_real(bx) == Ordering::Less,
                    };
                    if better {
                        best = Some((x, e));
                    }
                }
            }
            let (x_exit, edge) = best.expect("horizontal ray must exit a convex polygon");
            segs.push(ChordSeg {
                poly,
                y: start.y.clone(),
                x0: start.x.clone(),
                x1: x_exit.clone(),
            });
            let exit = Point::new(x_exit, start.y.clone());
            let pgon = &self.s.polygons[poly];
            for v in 0..n {
                if pgon.vertex(v) == &exit {
                    return Ok((segs, self.s.vertex_class_of(poly, v)));
                }
            }
            let eref = EdgeRef { poly, edge };
            let t = self.s.crossing_translation(eref);
            start = exit.add(&t);
            poly = self.s.partner(eref).poly;
        }
        Err(TraceError::BudgetExhausted)
    }

    fn connections(&self) -> Result<Vec<Connection>, TraceError> {
        let mut out: Vec<Connection> = Vec::new();
        let mut seen_edges: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for (pi, p) in self.s.polygons.iter().enumerate() {
            for e in 0..p.len() {
                if !p.edge_vector(e).y.is_zero() || seen_edges.contains_key(&(pi, e)) {
                    continue;
                }
                let eref = EdgeRef { poly: pi, edge: e };
                let partner = self.s.partner(eref);
                let id = out.len();
                seen_edges.insert((pi, e), id);
                seen_edges.insert((partner.poly, partner.edge), id);
                let a = p.vertex(e);
                let b = p.vertex(e + 1);
                let (x0, x1, sv, ev) = if a.x.cmp_real(&b.x) == Ordering::Less {
                    (a.x.clone(), b.x.clone(), e, e + 1)
                } else {
                    (b.x.clone(), a.x.clone(), e + 1, e)
                };
                out.push(Connection {
                    length: x1.sub(&x0),
                    segs: vec![ChordSeg {
                        poly: pi,
                        y: a.y.clone(),
                        x0,
                        x1,
                    }],
                    start_class: self.s.vertex_class_of(pi, sv),
                    end_class: self.s.vertex_class_of(pi, ev),
                    on_boundary: true,
                });
            }
        }
        let plus_x = Point::new(CycNum::one(), CycNum::zero());
        for (pi, p) in self.s.polygons.iter().enumerate() {
            let n = p.len();
            for v in 0..n {
                let d_out = p.edge_vector(v);
                let d_in = p.vertex(v + n - 1).sub(p.vertex(v));
                if !sector_contains(&d_out, &d_in, &plus_x) {
                    continue;
                }
                if cross_sign(&d_out, &plus_x) == Sign::Zero {
                    continue; // runs along the boundary edge
                }
                let (segs, end_class) = self.trace_ray(pi, p.vertex(v).clone())?;
                let length = segs
                    .iter()
                    .fold(CycNum::zero(), |acc, s| acc.add(&s.x1.sub(&s.x0)));
                out.push(Connection {
                    segs,
                    start_class: self.s.vertex_class_of(pi, v),
                    end_class,
                    length,
                    on_boundary: false,
                });
            }
        }
        Ok(out)
    }
}

struct Levels {
    per_poly: Vec<Vec<CycNum>>,
}

impl Levels {
    fn index_of(&self, poly: usize, y: &CycNum) -> Option<usize> {
        self.per_poly[poly].iter().position(|l| l == y)
    }
}

fn build_levels(s: &Surface, conns: &[Connection]) -> Levels {
    let mut per_poly: Vec<Vec<CycNum>> = s
        .polygons
        .iter()
        .map(|p| p.vertices.iter().map(|v| v.y.clone()).collect())
        .collect();
    for c in conns {
        for seg in &c.segs {
            per_poly[seg.poly].push(seg.y.clone());
        }
    }
    for levels in &mut per_poly {
        levels.sort_by(|a, b| a.cmp_real(b));
        levels.dedup();
    }
    Levels { per_poly }
}

fn build_strips(s: &Surface, levels: &Levels) -> Vec<Strip> {
    let mut strips = Vec::new();
    for (pi, p) in s.polygons.iter().enumerate() {
        let n = p.len();
        for w in levels.per_poly[pi].windows(2) {
            let (y0, y1) = (&w[0], &w[1]);
            let mut covering: Vec<usize> = Vec::new();
            for e in 0..n {
                let a = p.vertex(e);
                let b = p.vertex(e + 1);
                if a.y == b.y {
                    continue;
                }
                let (lo, hi) = if a.y.cmp_real(&b.y) == Ordering::Less {
                    (&a.y, &b.y)
                } else {
                    (&b.y, &a.y)
                };
                if lo.cmp_real(y0) != Ordering::Greater && hi.cmp_real(y1) != Ordering::Less {
                    covering.push(e);
                }
            }
            if covering.len() < 2 {
                continue;
            }
            assert_eq!(covering.len(), 2, "convex band must have two sides");
            let probe = Strip {
                poly: pi,
                y0: y0.clone(),
                y1: y1.clone(),
                left: covering[0],
                right: covering[1],
            };
            let mid = probe.mid_y();
            let x0 = probe.x_on_edge(s, covering[0], &mid);
            let x1 = probe.x_on_edge(s, covering[1], &mid);
            let (left, right) = if x0.cmp_real(&x1) == Ordering::Less {
                (covering[0], covering[1])
            } else {
                (covering[1], covering[0])
            };
            strips.push(Strip {
                poly: pi,
                y0: y0.clone(),
                y1: y1.clone(),
                left,
                right,
            });
        }
    }
    strips
}

struct Uf(Vec<usize>);

impl Uf {
    fn new(n: usize) -> Self {
        Uf((0..n).collect())
    }
    fn find(&mut self, mut i: usize) -> usize {
        while self.0[i] != i {
            self.0[i] = self.0[self.0[i]];
            i = self.0[i];
        }
        i
    }
    fn union(&mut self, a: usize, b: usize) {
        let (x, y) = (self.find(a), self.find(b));
        self.0[x] = y;
    }
}

/// Coverage of one side of a strip.
enum Cover {
    /// `(conn, x0, x1)` pieces tiling the side, sorted by x.
    Arcs(Vec<(usize, CycNum, CycNum)>),
    /// Open interface: index of the strip directly across in the polygon.
    Open(usize),
    /// Zero-width side.
    Apex,
}

struct Decomposer<'a> {
    s: &'a Surface,
    strips: Vec<Strip>,
    levels: Levels,
    /// strip index by (poly, lower level index)
    by_lower: BTreeMap<(usize, usize), usize>,
    /// strip index by (poly, upper level index)
    by_upper: BTreeMap<(usize, usize), usize>,
    /// chords by (poly, level index): (conn, x0, x1)
    chords: BTreeMap<(usize, usize), Vec<(usize, CycNum, CycNum)>>,
    /// connection id per horizontal boundary edge
    edge_conn: BTreeMap<(usize, usize), usize>,
}

impl<'a> Decomposer<'a> {
    fn new(s: &'a Surface, connections: &[Connection]) -> Self {
        let levels = build_levels(s, connections);
        let strips = build_strips(s, &levels);
        let mut by_lower = BTreeMap::new();
        let mut by_upper = BTreeMap::new();
        for (si, st) in strips.iter().enumerate() {
            let lo = levels.index_of(st.poly, &st.y0).unwrap();
            let hi = levels.index_of(st.poly, &st.y1).unwrap();
            let prev = by_lower.insert((st.poly, lo), si);
            assert!(prev.is_none(), "one strip per band");
            by_upper.insert((st.poly, hi), si);
        }
        let mut chords: BTreeMap<(usize, usize), Vec<(usize, CycNum, CycNum)>> = BTreeMap::new();
        let mut edge_conn = BTreeMap::new();
        for (ci, c) in connections.iter().enumerate() {
            if c.on_boundary {
                let seg = &c.segs[0];
                let eref = find_horizontal_edge(s, seg);
                edge_conn.insert((eref.poly, eref.edge), ci);
                let partner = s.partner(eref);
                edge_conn.insert((partner.poly, partner.edge), ci);
            } else {
                for seg in &c.segs {
                    let li = levels.index_of(seg.poly, &seg.y).unwrap();
                    chords
                        .entry((seg.poly, li))
                        .or_default()
                        .push((ci, seg.x0.clone(), seg.x1.clone()));
                }
            }
        }
        Decomposer {
            s,
            strips,
            levels,
            by_lower,
            by_upper,
            chords,
            edge_conn,
        }
    }

    fn right_neighbor(&self, si: usize) -> (usize, CycNum) {
        let strip = &self.strips[si];
        let eref = EdgeRef {
            poly: strip.poly,
            edge: strip.right,
        };
        let partner = self.s.partner(eref);
        let t = self.s.crossing_translation(eref);
        let y0 = strip.y0.add(&t.y);
        let li = self
            .levels
            .index_of(partner.poly, &y0)
            .expect("translated level is a cut level");
        let nb = *self
            .by_lower
            .get(&(partner.poly, li))
            .expect("strip across the edge");
        (nb, t.x)
    }

    fn boundary_arcs(
        &self,
        strip: &Strip,
        y: &CycNum,
        xl: &CycNum,
        xr: &CycNum,
        level: usize,
    ) -> Option<Vec<(usize, CycNum, CycNum)>> {
        if let Some(chords) = self.chords.get(&(strip.poly, level)) {
            let arcs: Vec<(usize, CycNum, CycNum)> = chords
                .iter()
                .filter(|(_, x0, x1)| {
                    x0.cmp_real(xl) != Ordering::Less && x1.cmp_real(xr) != Ordering::Greater
                })
                .cloned()
                .collect();
            if !arcs.is_empty() {
                let mut arcs = arcs;
                arcs.sort_by(|a, b| a.1.cmp_real(&b.1));
                assert!(
                    &arcs[0].1 == xl && &arcs.last().unwrap().2 == xr,
                    "chords must tile the cross-section"
                );
                return Some(arcs);
            }
        }
        let p = &self.s.polygons[strip.poly];
        let mut arcs: Vec<(usize, CycNum, CycNum)> = Vec::new();
        for e in 0..p.len() {
            let a = p.vertex(e);
            let b = p.vertex(e + 1);
            if a.y != b.y || &a.y != y {
                continue;
            }
            let (x0, x1) = if a.x.cmp_real(&b.x) == Ordering::Less {
                (a.x.clone(), b.x.clone())
            } else {
                (b.x.clone(), a.x.clone())
            };
            if x0.cmp_real(xl) != Ordering::Less && x1.cmp_real(xr) != Ordering::Greater {
                let conn = *self
                    .edge_conn
                    .get(&(strip.poly, e))
                    .expect("horizontal edge has a connection");
                arcs.push((conn, x0, x1));
            }
        }
        if !arcs.is_empty() {
            arcs.sort_by(|a, b| a.1.cmp_real(&b.1));
            assert!(
                &arcs[0].1 == xl && &arcs.last().unwrap().2 == xr,
                "edges must tile the cross-section"
            );
            return Some(arcs);
        }
        None
    }

    fn top_cover(&self, si: usize) -> Cover {
        let strip = &self.strips[si];
        let xl = strip.left_x(self.s, &strip.y1);
        let xr = strip.right_x(self.s, &strip.y1);
        if xl == xr {
            return Cover::Apex;
        }
        let li = self.levels.index_of(strip.poly, &strip.y1).unwrap();
        if let Some(arcs) = self.boundary_arcs(strip, &strip.y1, &xl, &xr, li) {
            return Cover::Arcs(arcs);
        }
        let above = *self
            .by_lower
            .get(&(strip.poly, li))
            .expect("open interface continues upward");
        Cover::Open(above)
    }

    fn bottom_cover(&self, si: usize) -> Cover {
        let strip = &self.strips[si];
        let xl = strip.left_x(self.s, &strip.y0);
        let xr = strip.right_x(self.s, &strip.y0);
        if xl == xr {
            return Cover::Apex;
        }
        let li = self.levels.index_of(strip.poly, &strip.y0).unwrap();
        if let Some(arcs) = self.boundary_arcs(strip, &strip.y0, &xl, &xr, li) {
            return Cover::Arcs(arcs);
        }
        let below = *self
            .by_upper
            .get(&(strip.poly, li))
            .expect("open interface continues downward");
        Cover::Open(below)
    }
}

fn find_horizontal_edge(s: &Surface, seg: &ChordSeg) -> EdgeRef {
    let p = &s.polygons[seg.poly];
    for e in 0..p.len() {
        let a = p.vertex(e);
        let b = p.vertex(e + 1);
        if a.y == b.y && a.y == seg.y {
            let (x0, x1) = if a.x.cmp_real(&b.x) == Ordering::Less {
                (&a.x, &b.x)
            } else {
                (&b.x, &a.x)
            };
            if *x0 == seg.x0 && *x1 == seg.x1 {
                return EdgeRef {
                    poly: seg.poly,
                    edge: e,
                };
            }
        }
    }
    panic!("boundary segment is not an edge");
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

/// Full horizontal cylinder decomposition.
pub fn decompose_horizontal(
    s: &Surface,
    budget: usize,
) -> Result<CylinderDecomposition, TraceError> {
    let tracer = Tracer { s, budget };
    let connections = tracer.connections()?;
    let d = Decomposer::new(s, &connections);
    let n = d.strips.len();

    // cylinders: strips connected sideways and through open interfaces
    let mut uf = Uf::new(n);
    for si in 0..n {
        let (nb, _) = d.right_neighbor(si);
        uf.union(si, nb);
        if let Cover::Open(above) = d.top_cover(si) {
            uf.union(si, above);
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for si in 0..n {
        groups.entry(uf.find(si)).or_default().push(si);
    }
    let mut roots: Vec<usize> = groups.keys().copied().collect();
    roots.sort_by_key(|r| *groups[r].first().unwrap());

    let mut cylinders = Vec::new();
    for root in roots {
        let members = groups[&root].clone();
        let first = *members.iter().min().unwrap();

        // cylinder coordinates: offset c per strip with xi = x + c
        let mut offset: BTreeMap<usize, CycNum> = BTreeMap::new();
        offset.insert(first, CycNum::zero());
        let mut queue = vec![first];
        while let Some(si) = queue.pop() {
            let c = offset[&si].clone();
            let (nb, tx) = d.right_neighbor(si);
            if !offset.contains_key(&nb) {
                offset.insert(nb, c.sub(&tx));
                queue.push(nb);
            }
            if let Cover::Open(above) = d.top_cover(si) {
                if !offset.contains_key(&above) {
                    offset.insert(above, c.clone());
                    queue.push(above);
                }
            }
            if let Cover::Open(below) = d.bottom_cover(si) {
                if !offset.contains_key(&below) {
                    offset.insert(below, c.clone());
                    queue.push(below);
                }
            }
        }
        debug_assert_eq!(offset.len(), members.len());

        // ring structure: the bottom ring consists of the strips whose
        // bottom side is not an open interface; higher rings are peeled off
        // by following the open tops
        let strip_h = |si: usize| d.strips[si].height();
        let mut ring_levels: Vec<Vec<usize>> = Vec::new();
        let mut current: Vec<usize> = members
            .iter()
            .copied()
            .filter(|&si| !matches!(d.bottom_cover(si), Cover::Open(_)))
            .collect();
        assert!(!current.is_empty(), "cylinder without covered bottom");
        loop {
            ring_levels.push(current.clone());
            let next: Vec<usize> = current
                .iter()
                .filter_map(|&si| match d.top_cover(si) {
                    Cover::Open(above) => Some(above),
                    _ => None,
                })
                .collect();
            if next.is_empty() {
                break;
            }
            let mut next = next;
            next.sort_unstable();
            next.dedup();
            // a ring may include strips whose bottom is an apex of the level
            current = next;
        }
        let collected: usize = ring_levels.iter().map(|r| r.len()).sum();
        assert_eq!(collected, members.len(), "ring stacking must cover the cylinder");

        let height = ring_levels.iter().fold(CycNum::zero(), |acc, ring| {
            acc.add(&strip_h(ring[0]))
        });
        for ring in &ring_levels {
            for &si in ring {
                assert!(strip_h(si) == strip_h(ring[0]), "ring heights must agree");
            }
        }
        let width = ring_levels[0]
            .iter()
            .fold(CycNum::zero(), |acc, &si| acc.add(&d.strips[si].width_at_mid(s)));

        // circles
        let top_ring = ring_levels.last().unwrap();
        let top = circle_arcs(&d, &offset, top_ring, true, &width);
        let bottom = circle_arcs(&d, &offset, &ring_levels[0], false, &width);

        let core: Vec<ChordSeg> = ring_levels[0]
            .iter()
            .map(|&si| {
                let st = &d.strips[si];
                let m = st.mid_y();
                ChordSeg {
                    poly: st.poly,
                    y: m.clone(),
                    x0: st.left_x(s, &m),
                    x1: st.right_x(s, &m),
                }
            })
            .collect();

        let modulus = height.div(&width).expect("positive width");
        cylinders.push(CylinderData {
            width,
            height,
            modulus,
            top,
            bottom,
            core,
        });
    }

    let cylinders = merge_marked_interfaces(s, cylinders, &connections);

    Ok(CylinderDecomposition {
        direction: Direction::Horizontal,
        cylinders,
        connections,
    })
}

/// Merges cylinders separated only by circles all of whose junction points
/// are regular (cone angle one turn). Such circles arise from marked corner
/// points of the polygon presentation and do not bound maximal cylinders.
fn merge_marked_interfaces(
    s: &Surface,
    cylinders: Vec<CylinderData>,
    connections: &[Connection],
) -> Vec<CylinderData> {
    let turns = s.cone_turns();
    let regular = |conn: usize| {
        let c = &connections[conn];
        turns[c.start_class] == 1 && turns[c.end_class] == 1
    };
    let n = cylinders.len();
    // where each connection shows up on a bottom circle
    let mut bottom_pos: BTreeMap<usize, (usize, CycNum)> = BTreeMap::new();
    for (ci, cyl) in cylinders.iter().enumerate() {
        for arc in &cyl.bottom {
            bottom_pos.insert(arc.conn, (ci, arc.start.clone()));
        }
    }
    // removable top circles: cylinder above plus the coordinate shift that
    // carries the upper cylinder's positions into the lower frame
    let mut above_of: Vec<Option<(usize, CycNum)>> = alloc::vec![None; n];
    for (ci, cyl) in cylinders.iter().enumerate() {
        if cyl.top.is_empty() || !cyl.top.iter().all(|a| regular(a.conn)) {
            continue;
        }
        let (j, upper_start) = match bottom_pos.get(&cyl.top[0].conn) {
            Some(v) => v.clone(),
            None => continue,
        };
        if j == ci {
            continue; // self-glued through a marked circle: genuine boundary
        }
        // consistency: every arc must sit above the same cylinder with the
        // same alignment
        let shift = cyl.top[0].start.sub(&upper_start);
        let consistent = cyl.top.iter().all(|a| match bottom_pos.get(&a.conn) {
            Some((jj, us)) => {
                *jj == j && {
                    let d = a.start.sub(us);
                    let diff = d.sub(&shift);
                    let w = &cylinders[ci].width;
                    reduce_mod(&diff, w).is_zero()
                }
            }
            None => false,
        });
        if consistent {
            above_of[ci] = Some((j, shift));
        }
    }
    if above_of.iter().all(Option::is_none) {
        return cylinders;
    }
    // chains from the bottom
    let is_target: Vec<bool> = {
        let mut t = alloc::vec![false; n];
        for a in above_of.iter().flatten() {
            t[a.0] = true;
        }
        t
    };
    let mut merged = Vec::new();
    for root in 0..n {
        if is_target[root] {
            continue;
        }
        let mut chain = alloc::vec![(root, CycNum::zero())];
        loop {
            let (last, acc) = chain.last().unwrap().clone();
            match &above_of[last] {
                Some((j, shift)) => {
                    let next_shift = acc.add(shift);
                    if chain.iter().any(|(c, _)| c == j) {
                        break;
                    }
                    chain.push((*j, next_shift));
                }
                None => break,
            }
        }
        if chain.len() == 1 {
            merged.push(cylinders[root].clone());
            continue;
        }
        let width = cylinders[root].width.clone();
        let mut height = CycNum::zero();
        for (c, _) in &chain {
            assert!(cylinders[*c].width == width, "merged pieces share the width");
            height = height.add(&cylinders[*c].height);
        }
        let (top_cyl, top_shift) = chain.last().unwrap().clone();
        let top: Vec<CircleArc> = cylinders[top_cyl]
            .top
            .iter()
            .map(|a| CircleArc {
                conn: a.conn,
                start: reduce_mod(&a.start.add(&top_shift), &width),
                length: a.length.clone(),
            })
            .collect();
        let modulus = height.div(&width).expect("positive width");
        merged.push(CylinderData {
            width,
            height,
            modulus,
            top,
            bottom: cylinders[root].bottom.clone(),
            core: cylinders[root].core.clone(),
        });
    }
    merged
}

/// Arc positions of the circle bounding the given ring, in the cylinder
/// coordinate, coalescing adjacent arcs of the same connection.
fn circle_arcs(
    d: &Decomposer,
    offset: &BTreeMap<usize, CycNum>,
    ring: &[usize],
    top: bool,
    width: &CycNum,
) -> Vec<CircleArc> {
    let mut arcs: Vec<CircleArc> = Vec::new();
    for &si in ring {
        let cover = if top { d.top_cover(si) } else { d.bottom_cover(si) };
        let pieces = match cover {
            Cover::Arcs(a) => a,
            Cover::Apex => continue,
            Cover::Open(_) => panic!("circle with open interface"),
        };
        let c = &offset[&si];
        for (conn, x0, x1) in pieces {
            arcs.push(CircleArc {
                conn,
                start: reduce_mod(&x0.add(c), width),
                length: x1.sub(&x0),
            });
        }
    }
    arcs.sort_by(|a, b| a.start.cmp_real(&b.start));
    // merge adjacent arcs of the same connection
    let mut merged: Vec<CircleArc> = Vec::new();
    for a in arcs {
        if let Some(last) = merged.last_mut() {
            if last.conn == a.conn && last.start.add(&last.length) == a.start {
                last.length = last.length.add(&a.length);
                continue;
            }
        }
        merged.push(a);
    }
    if merged.len() >= 2 {
        let first = merged.first().unwrap();
        let last = merged.last().unwrap();
        if first.conn == last.conn {
            let end = reduce_mod(&last.start.add(&last.length), width);
            if end == first.start {
                let combined = CircleArc {
                    conn: last.conn,
                    start: last.start.clone(),
                    length: last.length.add(&first.length),
                };
                merged[0] = combined;
                merged.pop();
            }
        }
    }
    merged
}

/// Decomposition in either direction; vertical rotates the surface a
/// quarter turn and maps core segments back to the original frame.
pub fn cylinder_decomposition(
    s: &Surface,
    direction: Direction,
    budget: usize,
) -> Result<CylinderDecomposition, TraceError> {
    match direction {
        Direction::Horizontal => decompose_horizontal(s, budget),
        Direction::Vertical => {
            let r = s.rotated_cw();
            let mut d = decompose_horizontal(&r, budget)?;
            d.direction = Direction::Vertical;
            for c in &mut d.cylinders {
                for seg in &mut c.core {
                    // rotated (u, v) came from (x, y) = (-v, u): a horizontal
                    // segment at height v spanning [u0, u1] is an original
                    // vertical segment at x = -v, y in [u0, u1]
                    let x = seg.y.neg();
                    let y0 = seg.x0.clone();
                    let y1 = seg.x1.clone();
                    seg.y = x;
                    seg.x0 = y0;
                    seg.x1 = y1;
                }
            }
            Ok(d)
        }
    }
}

/// Geometric intersection numbers of horizontal cores with vertical cores.
pub fn intersection_matrix(
    h: &CylinderDecomposition,
    v: &CylinderDecomposition,
) -> Result<IntersectionMatrix, super::geometry::MatrixError> {
    assert_eq!(h.direction, Direction::Horizontal);
    assert_eq!(v.direction, Direction::Vertical);
    let rows = h.cylinders.len();
    let cols = v.cylinders.len();
    let mut m = vec![vec![0u64; cols]; rows];
    for (i, hc) in h.cylinders.iter().enumerate() {
        for (j, vc) in v.cylinders.iter().enumerate() {
            let mut count = 0u64;
            for hs in &hc.core {
                for vs in &vc.core {
                    if hs.poly != vs.poly {
                        continue;
                    }
                    // vertical core seg fields: y = x position, x0/x1 = y range
                    let vx = &vs.y;
                    let (vy0, vy1) = (&vs.x0, &vs.x1);
                    // Half-open in x, closed in y. A vertical segment
                    // endpoint always lies on a polygon edge, where a
                    // horizontal segment can only have its own endpoint, so
                    // the closed top end never double-counts interior hits
                    // and repairs the case where both curves cross the same
                    // edge point (one representation is excluded by the x
                    // rule, the other must then be accepted by the y rule).
                    if vx.cmp_real(&hs.x0) != Ordering::Less
                        && vx.cmp_real(&hs.x1) == Ordering::Less
                        && hs.y.cmp_real(vy0) != Ordering::Less
                        && hs.y.cmp_real(vy1) != Ordering::Greater
                    {
                        count += 1;
                    }
                }
            }
            m[i][j] = count;
        }
    }
    IntersectionMatrix::new(m)
}
