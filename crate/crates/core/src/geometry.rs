//! Lattice geometry of the coin problem: the lines `a·x + b·y = d`, their
//! first-quadrant lattice points, an exact Pick's-theorem auditor for simple
//! lattice polygons, and the parallelogram whose interior points correspond
//! one-to-one to the lines in the uniqueness band `ab-a-b < d < ab`.
//!
//! Everything here is exact integer (or exact rational) arithmetic; there is
//! no floating point in this module.

use std::collections::BTreeMap;
use std::fmt;

use crate::arith::{self, div_ceil, div_floor};
use crate::diophantine::{self, CoinPair};
use crate::error::{Error, Result};

/// An exact fraction in lowest terms with a positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i64,
    den: i64,
}

impl Rational {
    /// Reduces `num/den`. Panics on a zero denominator.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        let g = arith::gcd(num, den);
        let (mut num, mut den) = if g == 0 { (0, 1) } else { (num / g, den / g) };
        if den < 0 {
            num = -num;
            den = -den;
        }
        Rational { num, den }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// A point with exact rational coordinates.
pub type RationalPoint = (Rational, Rational);

/// The line `a·x + b·y = d` in the plane, for a validated pair and `d >= 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatticeLine {
    pair: CoinPair,
    d: i64,
}

impl LatticeLine {
    pub fn new(pair: CoinPair, d: i64) -> Result<Self> {
        if d < 0 {
            return Err(Error::NegativeAmount(d));
        }
        Ok(LatticeLine { pair, d })
    }

    pub fn pair(&self) -> CoinPair {
        self.pair
    }

    pub fn d(&self) -> i64 {
        self.d
    }
}

/// All integer points of the line with `x >= 0` and `y >= 0`, ascending in
/// `x`.
///
/// This walks the solution family from the scaled Bézout anchor and keeps
/// the members whose parameter `k` lies in `[-y0/a, x0/b]` — deliberately a
/// different route from [`diophantine::nonneg_solutions`], so the two can
/// cross-check each other.
pub fn lattice_points_first_quadrant(line: &LatticeLine) -> Result<Vec<(i64, i64)>> {
    let (a, b) = (line.pair.a(), line.pair.b());
    let family = diophantine::solve_any(line.pair, line.d)?;
    let (x0, y0) = family.anchor();
    let k_min = div_ceil(-y0, a);
    let k_max = div_floor(x0, b);
    if k_min > k_max {
        return Ok(Vec::new());
    }
    let mut points = Vec::with_capacity(usize::try_from(k_max - k_min + 1).unwrap_or(0));
    for k in (k_min..=k_max).rev() {
        let (x, y) = family.member(k)?;
        debug_assert!(x >= 0 && y >= 0);
        points.push((x, y));
    }
    Ok(points)
}

/// The two axis intercepts of the first-quadrant segment of the line:
/// `(d/a, 0)` and `(0, d/b)` as exact rationals. For `d = 0` both collapse
/// to the origin.
pub fn segment_endpoints(line: &LatticeLine) -> (RationalPoint, RationalPoint) {
    let zero = Rational::new(0, 1);
    (
        (Rational::new(line.d, line.pair.a()), zero),
        (zero, Rational::new(line.d, line.pair.b())),
    )
}

/// Twice the signed area of the oriented polygon (shoelace sum).
fn shoelace(vertices: &[(i64, i64)]) -> i128 {
    let n = vertices.len();
    let mut sum = 0_i128;
    for i in 0..n {
        let (x1, y1) = vertices[i];
        let (x2, y2) = vertices[(i + 1) % n];
        sum += x1 as i128 * y2 as i128 - x2 as i128 * y1 as i128;
    }
    sum
}

/// Sign of the cross product of `q - p` and `r - p`.
fn orient(p: (i64, i64), q: (i64, i64), r: (i64, i64)) -> i128 {
    (q.0 - p.0) as i128 * (r.1 - p.1) as i128 - (q.1 - p.1) as i128 * (r.0 - p.0) as i128
}

/// Whether `r` lies on the closed segment `p..q`, given that p, q, r are
/// collinear.
fn collinear_on_segment(p: (i64, i64), q: (i64, i64), r: (i64, i64)) -> bool {
    r.0 >= p.0.min(q.0) && r.0 <= p.0.max(q.0) && r.1 >= p.1.min(q.1) && r.1 <= p.1.max(q.1)
}

/// Whether the closed segments `p1..p2` and `p3..p4` share any point.
fn segments_intersect(p1: (i64, i64), p2: (i64, i64), p3: (i64, i64), p4: (i64, i64)) -> bool {
    let d1 = orient(p3, p4, p1);
    let d2 = orient(p3, p4, p2);
    let d3 = orient(p1, p2, p3);
    let d4 = orient(p1, p2, p4);
    if ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)) {
        return true;
    }
    (d1 == 0 && collinear_on_segment(p3, p4, p1))
        || (d2 == 0 && collinear_on_segment(p3, p4, p2))
        || (d3 == 0 && collinear_on_segment(p1, p2, p3))
        || (d4 == 0 && collinear_on_segment(p1, p2, p4))
}

/// A simple polygon with integer vertices, stored counterclockwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePolygon {
    vertices: Vec<(i64, i64)>,
}

impl LatticePolygon {
    /// Validates and normalizes: at least 3 vertices, consecutive vertices
    /// distinct, nonzero area, no two edges sharing more than an endpoint.
    /// The vertex cycle is reversed if given clockwise.
    pub fn new(vertices: Vec<(i64, i64)>) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::DegeneratePolygon("fewer than 3 vertices"));
        }
        for i in 0..n {
            if vertices[i] == vertices[(i + 1) % n] {
                return Err(Error::DegeneratePolygon("repeated consecutive vertex"));
            }
        }
        let area2 = shoelace(&vertices);
        if area2 == 0 {
            return Err(Error::DegeneratePolygon("zero area"));
        }
        // A vertex where the boundary doubles back onto the incoming edge.
        for i in 0..n {
            let u = vertices[i];
            let v = vertices[(i + 1) % n];
            let w = vertices[(i + 2) % n];
            if orient(u, v, w) == 0 {
                let dot = (v.0 - u.0) as i128 * (w.0 - v.0) as i128
                    + (v.1 - u.1) as i128 * (w.1 - v.1) as i128;
                if dot < 0 {
                    return Err(Error::SelfIntersecting);
                }
            }
        }
        // Non-adjacent edges may not touch at all.
        for i in 0..n {
            for j in i + 1..n {
                let adjacent = j == i + 1 || (i == 0 && j == n - 1);
                if adjacent {
                    continue;
                }
                let (p1, p2) = (vertices[i], vertices[(i + 1) % n]);
                let (p3, p4) = (vertices[j], vertices[(j + 1) % n]);
                if segments_intersect(p1, p2, p3, p4) {
                    return Err(Error::SelfIntersecting);
                }
            }
        }
        let mut vertices = vertices;
        if area2 < 0 {
            vertices.reverse();
        }
        Ok(LatticePolygon { vertices })
    }

    /// Counterclockwise vertex cycle.
    pub fn vertices(&self) -> &[(i64, i64)] {
        &self.vertices
    }

    /// Whether `p` lies on an edge (vertices included).
    fn on_boundary(&self, p: (i64, i64)) -> bool {
        let n = self.vertices.len();
        (0..n).any(|i| {
            let u = self.vertices[i];
            let v = self.vertices[(i + 1) % n];
            orient(u, v, p) == 0 && collinear_on_segment(u, v, p)
        })
    }

    /// Exact crossing-number test; boundary points are not interior.
    fn strictly_inside(&self, p: (i64, i64)) -> bool {
        if self.on_boundary(p) {
            return false;
        }
        let (px, py) = p;
        let n = self.vertices.len();
        let mut inside = false;
        for i in 0..n {
            let (x1, y1) = self.vertices[i];
            let (x2, y2) = self.vertices[(i + 1) % n];
            if (y1 > py) != (y2 > py) {
                // The edge straddles the horizontal ray through p. The ray
                // crossing sits right of p iff (cross_x - px)·dy > 0.
                let dy = (y2 - y1) as i128;
                let lhs = (x1 - px) as i128 * dy + (py - y1) as i128 * (x2 - x1) as i128;
                if (dy > 0 && lhs > 0) || (dy < 0 && lhs < 0) {
                    inside = !inside;
                }
            }
        }
        inside
    }

    /// All lattice points strictly inside, by bounding-box scan.
    fn interior_points(&self) -> Vec<(i64, i64)> {
        let min_x = self.vertices.iter().map(|p| p.0).min().unwrap();
        let max_x = self.vertices.iter().map(|p| p.0).max().unwrap();
        let min_y = self.vertices.iter().map(|p| p.1).min().unwrap();
        let max_y = self.vertices.iter().map(|p| p.1).max().unwrap();
        let mut points = Vec::new();
        for x in min_x + 1..max_x {
            for y in min_y + 1..max_y {
                if self.strictly_inside((x, y)) {
                    points.push((x, y));
                }
            }
        }
        points
    }
}

/// Exact audit of Pick's identity `A = I + B/2 - 1` for one polygon, with
/// the area kept doubled so everything stays in integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PickAudit {
    /// Twice the polygon area, exact.
    pub area_twice: i64,
    /// Lattice points on the boundary.
    pub boundary_count: i64,
    /// Lattice points strictly inside.
    pub interior_count: i64,
    /// Whether `area_twice = 2·interior_count + boundary_count - 2`.
    pub pick_holds: bool,
}

/// Audits Pick's identity: shoelace area, per-edge gcd boundary count, and
/// an exact interior scan.
pub fn pick_audit(polygon: &LatticePolygon) -> Result<PickAudit> {
    let area_twice = i64::try_from(shoelace(polygon.vertices()).abs()).map_err(|_| Error::Overflow)?;
    let n = polygon.vertices().len();
    let mut boundary = 0_i128;
    for i in 0..n {
        let (x1, y1) = polygon.vertices()[i];
        let (x2, y2) = polygon.vertices()[(i + 1) % n];
        boundary += arith::gcd((x2 - x1).abs(), (y2 - y1).abs()) as i128;
    }
    let boundary_count = i64::try_from(boundary).map_err(|_| Error::Overflow)?;
    let interior_count = i64::try_from(polygon.interior_points().len()).map_err(|_| Error::Overflow)?;
    let pick_holds =
        area_twice as i128 == 2 * interior_count as i128 + boundary_count as i128 - 2;
    Ok(PickAudit { area_twice, boundary_count, interior_count, pick_holds })
}

/// The lattice parallelogram with vertices `(0, a)`, `(b, 0)`, `(b-1, -1)`,
/// `(-1, a-1)`. Its interior lattice points are exactly the points carried
/// by the lines with `ab-a-b < d < ab`.
pub fn frobenius_parallelogram(pair: CoinPair) -> Result<LatticePolygon> {
    pair.require_min_two()?;
    let (a, b) = (pair.a(), pair.b());
    LatticePolygon::new(vec![(-1, a - 1), (0, a), (b, 0), (b - 1, -1)])
}

/// For each `d` with `ab-a-b < d < ab`, the unique interior lattice point of
/// the parallelogram on the line `a·x + b·y = d`.
///
/// Any line in that band holding zero or two interior points would break
/// the correspondence; that is reported as [`Error::BijectionViolation`]
/// rather than silently repaired.
pub fn interior_line_bijection(pair: CoinPair) -> Result<BTreeMap<i64, (i64, i64)>> {
    let polygon = frobenius_parallelogram(pair)?;
    let (a, b) = (pair.a(), pair.b());
    let ab = arith::checked_mul(a, b)?;
    let f = ab - a - b;

    let mut by_line: BTreeMap<i64, Vec<(i64, i64)>> = BTreeMap::new();
    for (x, y) in polygon.interior_points() {
        let d = arith::checked_add(arith::checked_mul(a, x)?, arith::checked_mul(b, y)?)?;
        by_line.entry(d).or_default().push((x, y));
    }
    for (&d, points) in &by_line {
        if !(d > f && d < ab) {
            return Err(Error::BijectionViolation { d, count: points.len() });
        }
    }
    let mut map = BTreeMap::new();
    for d in f + 1..ab {
        match by_line.get(&d).map(Vec::as_slice) {
            Some([point]) => {
                map.insert(d, *point);
            }
            Some(points) => return Err(Error::BijectionViolation { d, count: points.len() }),
            None => return Err(Error::BijectionViolation { d, count: 0 }),
        }
    }
    Ok(map)
}
