//! Translation surfaces presented as convex polygons with edges identified
//! in pairs by translations. All coordinates are exact real cyclotomic
//! numbers; genus, cone angles and areas are computed combinatorially.

use crate::exact::{CycNum, Rat, Sign};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

#[derive(Clone, Debug, PartialEq)]
pub struct Point {
    pub x: CycNum,
    pub y: CycNum,
}

impl Point {
    pub fn new(x: CycNum, y: CycNum) -> Self {
        Point { x, y }
    }

    pub fn sub(&self, other: &Point) -> Point {
        Point {
            x: self.x.sub(&other.x),
            y: self.y.sub(&other.y),
        }
    }

    pub fn add(&self, other: &Point) -> Point {
        Point {
            x: self.x.add(&other.x),
            y: self.y.add(&other.y),
        }
    }

    /// Clockwise quarter rotation, mapping the upward direction to +x.
    pub fn rotated_cw(&self) -> Point {
        Point {
            x: self.y.clone(),
            y: self.x.neg(),
        }
    }
}

pub fn cross_sign(u: &Point, v: &Point) -> Sign {
    u.x.mul(&v.y)
        .sub(&u.y.mul(&v.x))
        .real_sign_unchecked()
}

pub fn dot_sign(u: &Point, v: &Point) -> Sign {
    u.x.mul(&v.x)
        .add(&u.y.mul(&v.y))
        .real_sign_unchecked()
}

/// Does the closed-open sector swept counterclockwise from `u` to `w`
/// (angle in (0, pi]) contain the direction `d`? The start ray is included,
/// the end ray excluded.
pub fn sector_contains(u: &Point, w: &Point, d: &Point) -> bool {
    if cross_sign(u, d) == Sign::Zero && dot_sign(u, d) == Sign::Positive {
        return true; // along the start ray
    }
    match cross_sign(u, w) {
        Sign::Positive => {
            cross_sign(u, d) == Sign::Positive && cross_sign(d, w) == Sign::Positive
        }
        Sign::Zero => {
            // angle pi (w opposite to u)
            cross_sign(u, d) == Sign::Positive
        }
        Sign::Negative => panic!("reflex corner in a convex polygon"),
    }
}

#[derive(Clone, Debug)]
pub struct Polygon {
    pub vertices: Vec<Point>,
}

impl Polygon {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex(&self, i: usize) -> &Point {
        &self.vertices[i % self.vertices.len()]
    }

    pub fn edge_vector(&self, i: usize) -> Point {
        self.vertex(i + 1).sub(self.vertex(i))
    }

    /// Twice the signed area (positive for counterclockwise orientation).
    pub fn double_area(&self) -> CycNum {
        let n = self.vertices.len();
        let mut s = CycNum::zero();
        for i in 0..n {
            let a = &self.vertices[i];
            let b = &self.vertices[(i + 1) % n];
            s = s.add(&a.x.mul(&b.y)).sub(&a.y.mul(&b.x));
        }
        s
    }

    fn validate(&self) -> Result<(), SurfaceError> {
        let n = self.vertices.len();
        if n < 3 {
            return Err(SurfaceError::DegeneratePolygon);
        }
        for p in &self.vertices {
            if !p.x.is_real() || !p.y.is_real() {
                return Err(SurfaceError::NonRealCoordinate);
            }
        }
        for i in 0..n {
            let e = self.edge_vector(i);
            if e.x.is_zero() && e.y.is_zero() {
                return Err(SurfaceError::DegeneratePolygon);
            }
            let f = self.edge_vector(i + 1);
            match cross_sign(&e, &f) {
                Sign::Negative => return Err(SurfaceError::NotConvexCcw),
                Sign::Zero => {
                    // collinear is fine as long as the direction is kept
                    if dot_sign(&e, &f) != Sign::Positive {
                        return Err(SurfaceError::NotConvexCcw);
                    }
                }
                Sign::Positive => {}
            }
        }
        if self.double_area().real_sign_unchecked() != Sign::Positive {
            return Err(SurfaceError::NotConvexCcw);
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct EdgeRef {
    pub poly: usize,
    pub edge: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SurfaceError {
    DegeneratePolygon,
    NonRealCoordinate,
    NotConvexCcw,
    BadPairing,
    EdgeMismatch(EdgeRef, EdgeRef),
}

impl core::fmt::Display for SurfaceError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            SurfaceError::DegeneratePolygon => write!(f, "degenerate polygon"),
            SurfaceError::NonRealCoordinate => write!(f, "coordinates must be real"),
            SurfaceError::NotConvexCcw => write!(f, "polygon must be convex and counterclockwise"),
            SurfaceError::BadPairing => write!(f, "edge pairing is not an involution on all edges"),
            SurfaceError::EdgeMismatch(a, b) => {
                write!(f, "paired edges {:?} and {:?} are not opposite translates", a, b)
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Horizontal,
    Vertical,
}

/// A closed translation surface.
#[derive(Clone, Debug)]
pub struct Surface {
    pub polygons: Vec<Polygon>,
    partner: Vec<Vec<EdgeRef>>,
    vertex_class: Vec<Vec<usize>>,
    class_count: usize,
}

impl Surface {
    pub fn new(
        polygons: Vec<Polygon>,
        pairs: Vec<(EdgeRef, EdgeRef)>,
    ) -> Result<Self, SurfaceError> {
        for p in &polygons {
            p.validate()?;
        }
        let mut partner: Vec<Vec<Option<EdgeRef>>> = polygons
            .iter()
            .map(|p| vec![None; p.len()])
            .collect();
        for &(a, b) in &pairs {
            if a == b {
                return Err(SurfaceError::BadPairing);
            }
            for &(src, dst) in &[(a, b), (b, a)] {
                if src.poly >= polygons.len() || src.edge >= polygons[src.poly].len() {
                    return Err(SurfaceError::BadPairing);
                }
                let slot = &mut partner[src.poly][src.edge];
                if slot.is_some() {
                    return Err(SurfaceError::BadPairing);
                }
                *slot = Some(dst);
            }
            // opposite parallel translates of the same length
            let ea = polygons[a.poly].edge_vector(a.edge);
            let eb = polygons[b.poly].edge_vector(b.edge);
            let s = ea.add(&eb);
            if !s.x.is_zero() || !s.y.is_zero() {
                return Err(SurfaceError::EdgeMismatch(a, b));
            }
        }
        let partner: Vec<Vec<EdgeRef>> = partner
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .collect::<Option<Vec<EdgeRef>>>()
                    .ok_or(SurfaceError::BadPairing)
            })
            .collect::<Result<_, _>>()?;

        // vertex classes by union-find over corners
        let offsets: Vec<usize> = polygons
            .iter()
            .scan(0usize, |acc, p| {
                let o = *acc;
                *acc += p.len();
                Some(o)
            })
            .collect();
        let total: usize = polygons.iter().map(|p| p.len()).sum();
        let mut uf: Vec<usize> = (0..total).collect();
        fn find(uf: &mut Vec<usize>, mut i: usize) -> usize {
            while uf[i] != i {
                uf[i] = uf[uf[i]];
                i = uf[i];
            }
            i
        }
        let idx = |e: EdgeRef, corner: usize| offsets[e.poly] + (e.edge + corner) % polygons[e.poly].len();
        for (pi, row) in partner.iter().enumerate() {
            for (ei, &p) in row.iter().enumerate() {
                let a = EdgeRef { poly: pi, edge: ei };
                // start of a ~ end of partner, end of a ~ start of partner
                let x = find(&mut uf, idx(a, 0));
                let y = find(&mut uf, idx(p, 1));
                uf[x] = y;
                let x = find(&mut uf, idx(a, 1));
                let y = find(&mut uf, idx(p, 0));
                uf[x] = y;
            }
        }
        let mut class_of = vec![usize::MAX; total];
        let mut class_count = 0;
        for i in 0..total {
            let root = find(&mut uf, i);
            if class_of[root] == usize::MAX {
                class_of[root] = class_count;
                class_count += 1;
            }
            class_of[i] = class_of[root];
        }
        let mut vertex_class: Vec<Vec<usize>> = Vec::with_capacity(polygons.len());
        for (pi, p) in polygons.iter().enumerate() {
            vertex_class.push((0..p.len()).map(|v| class_of[offsets[pi] + v]).collect());
        }

        Ok(Surface {
            polygons,
            partner,
            vertex_class,
            class_count,
        })
    }

    pub fn partner(&self, e: EdgeRef) -> EdgeRef {
        self.partner[e.poly][e.edge]
    }

    /// Translation applied when crossing edge `e` into its partner.
    pub fn crossing_translation(&self, e: EdgeRef) -> Point {
        let p = self.partner(e);
        // start of e maps to end of partner
        self.polygons[p.poly]
            .vertex(p.edge + 1)
            .sub(self.polygons[e.poly].vertex(e.edge))
    }

    pub fn vertex_class_of(&self, poly: usize, vertex: usize) -> usize {
        self.vertex_class[poly][vertex % self.polygons[poly].len()]
    }

    pub fn vertex_class_count(&self) -> usize {
        self.class_count
    }

    pub fn edge_pair_count(&self) -> usize {
        self.polygons.iter().map(|p| p.len()).sum::<usize>() / 2
    }

    /// Cone angle at each vertex class, as a multiple of a full turn.
    /// Computed by counting, over all corners of the class, how often the
    /// corner sector contains a fixed reference direction.
    pub fn cone_turns(&self) -> Vec<u64> {
        let mut turns = vec![0u64; self.class_count];
        let reference = Point::new(CycNum::one(), CycNum::one());
        for (pi, p) in self.polygons.iter().enumerate() {
            let n = p.len();
            for v in 0..n {
                let d_out = p.edge_vector(v);
                let d_in = p.vertex(v + n - 1).sub(p.vertex(v));
                if sector_contains(&d_out, &d_in, &reference) {
                    turns[self.vertex_class[pi][v]] += 1;
                }
            }
        }
        turns
    }

    /// Genus from the Euler characteristic of the identified complex.
    pub fn genus(&self) -> u64 {
        let v = self.class_count as i64;
        let e = self.edge_pair_count() as i64;
        let f = self.polygons.len() as i64;
        let chi = v - e + f;
        assert!(chi <= 2 && chi % 2 == 0, "odd euler characteristic");
        ((2 - chi) / 2) as u64
    }

    /// Orders of the zeros (cone turns minus one), descending, omitting
    /// regular marked classes.
    pub fn zero_orders(&self) -> Vec<u64> {
        let mut orders: Vec<u64> = self
            .cone_turns()
            .iter()
            .filter(|&&t| t >= 2)
            .map(|&t| t - 1)
            .collect();
        orders.sort_unstable_by(|a, b| b.cmp(a));
        orders
    }

    pub fn area(&self) -> CycNum {
        let two = Rat::new(1.into(), 2.into());
        self.polygons
            .iter()
            .fold(CycNum::zero(), |acc, p| acc.add(&p.double_area()))
            .scale(&two)
    }

    /// The same surface rotated clockwise by a quarter turn, so the
    /// original vertical direction becomes horizontal.
    pub fn rotated_cw(&self) -> Surface {
        let polygons: Vec<Polygon> = self
            .polygons
            .iter()
            .map(|p| Polygon {
                vertices: p.vertices.iter().map(|v| v.rotated_cw()).collect(),
            })
            .collect();
        Surface {
            polygons,
            partner: self.partner.clone(),
            vertex_class: self.vertex_class.clone(),
            class_count: self.class_count,
        }
    }
}

/// Total order on exact real numbers used for sorting coordinates.
pub fn cmp_real(a: &CycNum, b: &CycNum) -> Ordering {
    a.cmp_real(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_int;

    fn unit_square_torus() -> Surface {
        let p = Polygon {
            vertices: vec![
                Point::new(CycNum::zero(), CycNum::zero()),
                Point::new(CycNum::one(), CycNum::zero()),
                Point::new(CycNum::one(), CycNum::one()),
                Point::new(CycNum::zero(), CycNum::one()),
            ],
        };
        let e = |edge| EdgeRef { poly: 0, edge };
        Surface::new(vec![p], vec![(e(0), e(2)), (e(1), e(3))]).unwrap()
    }

    #[test]
    fn torus_invariants() {
        let s = unit_square_torus();
        assert_eq!(s.vertex_class_count(), 1);
        assert_eq!(s.genus(), 1);
        assert_eq!(s.cone_turns(), vec![1]);
        assert!(s.zero_orders().is_empty());
        assert_eq!(s.area(), CycNum::one());
    }

    #[test]
    fn octagon_genus_two() {
        // regular octagon with opposite sides identified: one zero of order 2
        let c = CycNum::root(8, 1).add(&CycNum::root(8, 7)); // sqrt(2)
        let half = crate::exact::rat_i64(1, 2);
        let s_half = c.scale(&half); // sqrt(2)/2
        let one = CycNum::one();
        // vertices of a regular octagon with horizontal/vertical edges
        let mut verts = Vec::new();
        let coords = [
            (one.clone(), CycNum::zero()),
            (one.add(&s_half), s_half.clone()),
            (one.add(&s_half), s_half.add(&one)),
            (one.clone(), s_half.add(&one).add(&s_half)),
            (CycNum::zero(), s_half.add(&one).add(&s_half)),
            (s_half.neg(), s_half.add(&one)),
            (s_half.neg(), s_half.clone()),
            (CycNum::zero(), CycNum::zero()),
        ];
        for (x, y) in coords {
            verts.push(Point::new(x, y));
        }
        let p = Polygon { vertices: verts };
        let e = |edge| EdgeRef { poly: 0, edge };
        let s = Surface::new(vec![p], vec![(e(0), e(4)), (e(1), e(5)), (e(2), e(6)), (e(3), e(7))])
            .unwrap();
        assert_eq!(s.vertex_class_count(), 1);
        assert_eq!(s.genus(), 2);
        assert_eq!(s.zero_orders(), vec![2]);
    }

    #[test]
    fn rotation_preserves_structure() {
        let s = unit_square_torus();
        let r = s.rotated_cw();
        assert_eq!(r.genus(), 1);
        assert_eq!(r.area(), CycNum::one());
    }

    #[test]
    fn mismatched_gluing_rejected() {
        let p = Polygon {
            vertices: vec![
                Point::new(CycNum::zero(), CycNum::zero()),
                Point::new(CycNum::from_int(2), CycNum::zero()),
                Point::new(CycNum::from_int(2), CycNum::one()),
                Point::new(CycNum::zero(), CycNum::one()),
            ],
        };
        let e = |edge| EdgeRef { poly: 0, edge };
        // left and bottom have different lengths
        assert!(matches!(
            Surface::new(vec![p], vec![(e(0), e(3)), (e(1), e(2))]),
            Err(SurfaceError::EdgeMismatch(_, _))
        ));
    }

    #[test]
    fn sector_tests() {
        let px = Point::new(CycNum::one(), CycNum::zero());
        let py = Point::new(CycNum::zero(), CycNum::one());
        let diag = Point::new(CycNum::one(), CycNum::one());
        assert!(sector_contains(&px, &py, &diag));
        assert!(sector_contains(&px, &py, &px));
        assert!(!sector_contains(&px, &py, &py));
        let nx = Point::new(CycNum::from_int(-1), CycNum::zero());
        // straight angle: everything strictly above the axis
        assert!(sector_contains(&px, &nx, &diag));
        assert!(!sector_contains(&px, &nx, &Point::new(CycNum::zero(), CycNum::from_int(-1))));
        let _ = rat_int(0);
    }
}
