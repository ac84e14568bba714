//! Corner-to-corner billiard paths in the unit square.
//!
//! A ball leaves corner `A = (0,0)` with slope `q/p`. Unfolding the square
//! across the walls it hits turns the path into the straight segment from
//! `(0,0)` to the lattice point `(p,q)`; folding that segment back with the
//! period-2 triangle wave in each coordinate recovers the bounces. All
//! coordinates are exact rationals.
//!
//! The path crosses a vertical grid line at `t = i/p` and a horizontal one at
//! `t = j/q`. For coprime `p, q` these never coincide before `t = 1`, so the
//! ball never meets a corner early. Irrational slopes such as `φ` give
//! infinite paths; [`golden_approximants`] yields the finite `fib^k` paths
//! that approach one.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rational::Slope;
use crate::word::fib_power;

/// Largest `p + q` for which [`fold_trajectory`] materializes a path.
pub const MAX_FOLD_EXTENT: u64 = 1 << 24;

/// Corners of the table: `A` bottom-left, then counterclockwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Corner {
    A,
    B,
    C,
    D,
}

impl Corner {
    pub fn from_coords(x: u8, y: u8) -> Option<Corner> {
        match (x, y) {
            (0, 0) => Some(Corner::A),
            (1, 0) => Some(Corner::B),
            (1, 1) => Some(Corner::C),
            (0, 1) => Some(Corner::D),
            _ => None,
        }
    }

    pub fn coords(self) -> (u8, u8) {
        match self {
            Corner::A => (0, 0),
            Corner::B => (1, 0),
            Corner::C => (1, 1),
            Corner::D => (0, 1),
        }
    }

    pub const ALL: [Corner; 4] = [Corner::A, Corner::B, Corner::C, Corner::D];
}

impl fmt::Display for Corner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = match self {
            Corner::A => "A",
            Corner::B => "B",
            Corner::C => "C",
            Corner::D => "D",
        };
        f.write_str(label)
    }
}

/// Exact point of the unit square.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: Ratio<u64>,
    pub y: Ratio<u64>,
}

impl Point {
    pub fn new(x: Ratio<u64>, y: Ratio<u64>) -> Self {
        Point { x, y }
    }

    pub fn corner(self) -> Option<Corner> {
        let unit = |r: Ratio<u64>| {
            if r.is_zero() {
                Some(0)
            } else if r == Ratio::from_integer(1) {
                Some(1)
            } else {
                None
            }
        };
        Corner::from_coords(unit(self.x)?, unit(self.y)?)
    }

    pub fn is_on_boundary(self) -> bool {
        let one = Ratio::from_integer(1);
        self.x.is_zero() || self.y.is_zero() || self.x == one || self.y == one
    }
}

/// The folded path of one slope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trajectory {
    slope: Slope,
    points: Vec<Point>,
    end_corner: Corner,
    length_squared: BigUint,
}

impl Trajectory {
    pub fn slope(&self) -> &Slope {
        &self.slope
    }

    /// Start, bounce points and end, in order.
    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn segments(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        self.points.windows(2).map(|w| (w[0], w[1]))
    }

    pub fn segment_count(&self) -> usize {
        self.points.len() - 1
    }

    pub fn bounce_points(&self) -> &[Point] {
        &self.points[1..self.points.len() - 1]
    }

    pub fn bounce_count(&self) -> usize {
        self.points.len() - 2
    }

    pub fn end_corner(&self) -> Corner {
        self.end_corner
    }

    /// `p² + q²`, the squared length of the unfolded segment.
    pub fn length_squared(&self) -> &BigUint {
        &self.length_squared
    }

    /// Line-oriented record: `p q end_corner segments`, then one
    /// `x0 y0 x1 y1` line per segment with every coordinate as `num/den`.
    pub fn to_record(&self) -> String {
        let mut out = format!(
            "{} {} {} {}\n",
            self.slope.denom(),
            self.slope.numer(),
            self.end_corner,
            self.segment_count()
        );
        for (a, b) in self.segments() {
            out.push_str(&format!(
                "{} {} {} {}\n",
                frac(a.x),
                frac(a.y),
                frac(b.x),
                frac(b.y)
            ));
        }
        out
    }
}

fn frac(r: Ratio<u64>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// A parsed trajectory record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrajectoryRecord {
    pub p: u64,
    pub q: u64,
    pub end_corner: Corner,
    pub segments: Vec<(Point, Point)>,
}

impl TrajectoryRecord {
    pub fn parse(text: &str) -> Option<TrajectoryRecord> {
        let mut lines = text.lines();
        let header: Vec<&str> = lines.next()?.split(' ').collect();
        let [p, q, corner, count] = header.as_slice() else {
            return None;
        };
        let end_corner = match *corner {
            "A" => Corner::A,
            "B" => Corner::B,
            "C" => Corner::C,
            "D" => Corner::D,
            _ => return None,
        };
        let parse_frac = |s: &str| -> Option<Ratio<u64>> {
            let (n, d) = s.split_once('/')?;
            let (n, d): (u64, u64) = (n.parse().ok()?, d.parse().ok()?);
            (d != 0).then(|| Ratio::new(n, d))
        };
        let segments = lines
            .map(|line| {
                let f: Vec<Ratio<u64>> = line.split(' ').map(parse_frac).collect::<Option<_>>()?;
                let [x0, y0, x1, y1] = f.as_slice() else {
                    return None;
                };
                Some((Point::new(*x0, *y0), Point::new(*x1, *y1)))
            })
            .collect::<Option<Vec<_>>>()?;
        if segments.len() != count.parse::<usize>().ok()? {
            return None;
        }
        Some(TrajectoryRecord {
            p: p.parse().ok()?,
            q: q.parse().ok()?,
            end_corner,
            segments,
        })
    }
}

/// Lattice endpoint `(p, q)` of the unfolded path.
pub fn unfold_endpoint(s: &Slope) -> (BigUint, BigUint) {
    (s.denom().clone(), s.numer().clone())
}

/// Period-2 triangle wave: `u mod 2` if that is at most 1, else
/// `2 − (u mod 2)`.
pub fn fold_point<T: Integer + Clone>(u: &Ratio<T>) -> Ratio<T> {
    let one = T::one();
    let two = one.clone() + one.clone();
    let denom = u.denom().clone();
    let period = two * denom.clone();
    let m = u.numer().mod_floor(&period);
    if m <= denom {
        Ratio::new(m, denom)
    } else {
        Ratio::new(period - m, denom)
    }
}

/// Corner `(p mod 2, q mod 2)` where the path ends. Never `A` for a coprime
/// slope.
pub fn end_corner(s: &Slope) -> Corner {
    let parity = |n: &BigUint| u8::from(n.is_odd());
    Corner::from_coords(parity(s.denom()), parity(s.numer())).expect("parities are 0 or 1")
}

/// `(p² + q², √(p² + q²))`.
pub fn trajectory_length(s: &Slope) -> (BigUint, f64) {
    let sq = s.numer() * s.numer() + s.denom() * s.denom();
    let len = sq.to_f64().unwrap_or(f64::INFINITY).sqrt();
    (sq, len)
}

pub fn fold_trajectory(s: &Slope) -> Result<Trajectory> {
    let to_u64 = |n: &BigUint| n.to_u64().ok_or(Error::TooLarge("trajectory extent"));
    fold_lattice_path(to_u64(s.denom())?, to_u64(s.numer())?)
}

/// Folds the unfolded segment `(0,0) → (p,q)` into the square.
///
/// Rejects non-coprime pairs: the same slope has a shorter path through the
/// reduced pair, and the longer one would pass through a corner on the way.
pub fn fold_lattice_path(p: u64, q: u64) -> Result<Trajectory> {
    if p == 0 || q == 0 {
        return Err(Error::NotPositive("lattice coordinate"));
    }
    let slope = Slope::new(q, p)?;
    let extent = p.checked_add(q).ok_or(Error::TooLarge("trajectory extent"))?;
    if extent > MAX_FOLD_EXTENT {
        return Err(Error::CapExceeded {
            what: "p + q",
            value: extent,
            cap: MAX_FOLD_EXTENT,
        });
    }

    let (p_w, q_w) = (u128::from(p), u128::from(q));
    let mut points = Vec::with_capacity((extent) as usize);
    points.push(Point::new(Ratio::zero(), Ratio::zero()));
    let (mut i, mut j) = (1u64, 1u64);
    // merge t = i/p and t = j/q by comparing i·q with j·p
    while i < p || j < q {
        let take_vertical = if i >= p {
            false
        } else if j >= q {
            true
        } else {
            let (iq, jp) = (u128::from(i) * q_w, u128::from(j) * p_w);
            assert_ne!(iq, jp, "coprime crossings never coincide before t = 1");
            iq < jp
        };
        let point = if take_vertical {
            // x reaches the integer i, y = i q / p
            let y = fold_wide(u128::from(i) * q_w, p_w);
            i += 1;
            Point::new(Ratio::from_integer((i - 1) % 2), y)
        } else {
            let x = fold_wide(u128::from(j) * p_w, q_w);
            j += 1;
            Point::new(x, Ratio::from_integer((j - 1) % 2))
        };
        points.push(point);
    }
    points.push(Point::new(Ratio::from_integer(p % 2), Ratio::from_integer(q % 2)));

    let end = end_corner(&slope);
    debug_assert_eq!(points.last().and_then(|pt| pt.corner()), Some(end));
    let (length_squared, _) = trajectory_length(&slope);
    Ok(Trajectory {
        slope,
        points,
        end_corner: end,
        length_squared,
    })
}

/// Folds `numer/denom` with 128-bit intermediates; the folded value lies in
/// `[0, 1]` with a denominator dividing `denom`, so it narrows to `u64`.
fn fold_wide(numer: u128, denom: u128) -> Ratio<u64> {
    let folded = fold_point(&Ratio::new(numer, denom));
    Ratio::new_raw(
        u64::try_from(*folded.numer()).expect("folded numerator <= denominator"),
        u64::try_from(*folded.denom()).expect("denominator fits u64"),
    )
}

/// The finite paths `fib^k(1/1)` for `k = 1..=k_max`, whose slopes approach
/// the golden ratio. The limiting path itself never reaches a corner.
pub fn golden_approximants(k_max: usize) -> impl Iterator<Item = Result<Trajectory>> {
    (1..=k_max).map(|k| fold_trajectory(&fib_power(k).1))
}
