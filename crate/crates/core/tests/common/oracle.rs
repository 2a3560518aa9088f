//! Independent arithmetic for y^2 = x^3 + 2x + 2 over F_17, in plain i64.
//! Shares no code with the library: inverses come from Fermat's little
//! theorem rather than extended Euclid, and points are tuples.

pub const P: i64 = 17;
pub const A: i64 = 2;
pub const B: i64 = 2;
pub const GEN: (i64, i64) = (5, 1);
pub const ORDER: usize = 19;

/// `None` is the point at infinity.
pub type OPoint = Option<(i64, i64)>;

fn m(v: i64) -> i64 {
    v.rem_euclid(P)
}

fn inv(v: i64) -> i64 {
    // v^(p-2)
    let mut acc = 1;
    for _ in 0..P - 2 {
        acc = m(acc * v);
    }
    acc
}

/// Every (x, y) in F_17^2 on the curve, plus the point at infinity.
pub fn enumerate() -> Vec<OPoint> {
    let mut pts = vec![None];
    for x in 0..P {
        for y in 0..P {
            if m(y * y) == m(x * x * x + A * x + B) {
                pts.push(Some((x, y)));
            }
        }
    }
    pts
}

pub fn add(u: OPoint, v: OPoint) -> OPoint {
    let ((x1, y1), (x2, y2)) = match (u, v) {
        (None, _) => return v,
        (_, None) => return u,
        (Some(a), Some(b)) => (a, b),
    };
    let l = if x1 == x2 {
        if m(y1 + y2) == 0 {
            return None;
        }
        m((3 * x1 * x1 + A) * inv(2 * y1))
    } else {
        m((y2 - y1) * inv(x2 - x1))
    };
    let x3 = m(l * l - x1 - x2);
    Some((x3, m(l * (x1 - x3) - y1)))
}

/// `k`-fold repeated addition.
pub fn repeat(k: usize, u: OPoint) -> OPoint {
    (0..k).fold(None, |acc, _| add(acc, u))
}
