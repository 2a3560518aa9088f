//! Short-Weierstrass curve arithmetic over a prime field.
//!
//! Points are kept in affine coordinates and inverted with the extended
//! Euclidean algorithm. Nothing here is constant time; the module favours
//! code that can be checked by hand against the toy curve
//! `y^2 = x^3 + 2x + 2 (mod 17)`, whose generator `(5, 1)` has order 19.
//!
//! Throughout, `p` is the field modulus and `q` is the order of the group
//! generated by the base point. The two are never interchangeable.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};
use rand_chacha::ChaCha20Rng;
use rand_core::{RngCore, SeedableRng};
use thiserror::Error;

/// Fields below this bound get the exhaustive order check in
/// [`CurveParams::validate`].
const EXHAUSTIVE_LIMIT: u64 = 1 << 16;

/// Miller-Rabin rounds used for `p` and `q`.
const PRIMALITY_ROUNDS: u32 = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("field modulus is not a prime greater than 3")]
    NonPrimeModulus,
    #[error("curve is singular: 4a^3 + 27b^2 = 0 mod p")]
    SingularCurve,
    #[error("generator is not on the curve")]
    GeneratorNotOnCurve,
    #[error("group order is not prime")]
    NonPrimeOrder,
    #[error("generator does not have the declared order")]
    WrongOrder,
    #[error("parameter {0} is not reduced modulo p")]
    OutOfRange(&'static str),
    #[error("malformed point encoding")]
    MalformedEncoding,
    #[error("point is not on the curve")]
    PointNotOnCurve,
    #[error("curve parameter file: {0}")]
    ParamFile(String),
}

/// A group element: the point at infinity or an affine point.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Point {
    Identity,
    Affine { x: BigUint, y: BigUint },
}

impl Point {
    pub fn affine(x: impl Into<BigUint>, y: impl Into<BigUint>) -> Self {
        Point::Affine {
            x: x.into(),
            y: y.into(),
        }
    }

    pub fn is_identity(&self) -> bool {
        matches!(self, Point::Identity)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Identity => f.write_str("O"),
            Point::Affine { x, y } => write!(f, "({x}, {y})"),
        }
    }
}

/// An integer modulo the group order `q`. Only [`CurveParams`] can build
/// one, so the value is always reduced.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scalar(BigUint);

impl Scalar {
    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Unvalidated curve parameters, as read from a parameter file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawCurveParams {
    pub p: BigUint,
    pub a: BigUint,
    pub b: BigUint,
    pub gx: BigUint,
    pub gy: BigUint,
    pub q: BigUint,
}

impl RawCurveParams {
    /// Parameters of the toy curve used by all deterministic examples.
    pub fn toy() -> Self {
        RawCurveParams {
            p: 17u32.into(),
            a: 2u32.into(),
            b: 2u32.into(),
            gx: 5u32.into(),
            gy: 1u32.into(),
            q: 19u32.into(),
        }
    }

    /// Renders the `key = value` text form accepted by [`FromStr`].
    pub fn to_file_string(&self) -> String {
        format!(
            "p = {}\na = {}\nb = {}\ngx = {}\ngy = {}\nq = {}\n",
            self.p, self.a, self.b, self.gx, self.gy, self.q
        )
    }
}

impl FromStr for RawCurveParams {
    type Err = GroupError;

    /// Parses `key = value` lines with decimal integers for the keys
    /// `p`, `a`, `b`, `gx`, `gy` and `q`. Blank lines and `#` comments are
    /// skipped; unknown or repeated keys are errors.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        const KEYS: [&str; 6] = ["p", "a", "b", "gx", "gy", "q"];
        let mut values: [Option<BigUint>; 6] = Default::default();

        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| GroupError::ParamFile(format!("line {}: expected `key = value`", lineno + 1)))?;
            let key = key.trim();
            let value = value.trim();
            let slot = KEYS
                .iter()
                .position(|k| *k == key)
                .ok_or_else(|| GroupError::ParamFile(format!("unknown key `{key}`")))?;
            if values[slot].is_some() {
                return Err(GroupError::ParamFile(format!("duplicate key `{key}`")));
            }
            values[slot] = Some(
                parse_decimal(value)
                    .ok_or_else(|| GroupError::ParamFile(format!("`{key}` is not a decimal integer: `{value}`")))?,
            );
        }

        let mut take = |i: usize| {
            values[i]
                .take()
                .ok_or_else(|| GroupError::ParamFile(format!("missing key `{}`", KEYS[i])))
        };
        Ok(RawCurveParams {
            p: take(0)?,
            a: take(1)?,
            b: take(2)?,
            gx: take(3)?,
            gy: take(4)?,
            q: take(5)?,
        })
    }
}

fn parse_decimal(s: &str) -> Option<BigUint> {
    if s.is_empty() || !s.bytes().all(|c| c.is_ascii_digit()) {
        return None;
    }
    BigUint::parse_bytes(s.as_bytes(), 10)
}

/// Validated domain parameters: the curve, its base point and the order of
/// the group the base point generates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveParams {
    p: BigUint,
    a: BigUint,
    b: BigUint,
    gen: Point,
    q: BigUint,
    field_width: usize,
    scalar_width: usize,
}

impl CurveParams {
    /// The toy curve `(p=17, a=2, b=2, gen=(5,1), q=19)`.
    pub fn toy() -> Self {
        Self::validate(RawCurveParams::toy()).expect("toy curve parameters are valid")
    }

    /// Checks candidate parameters and returns a usable curve.
    ///
    /// For `p < 2^16` the generator's order is confirmed by walking the
    /// whole cyclic subgroup; above that, `q` must pass Miller-Rabin and
    /// `q * gen` must be the identity.
    pub fn validate(raw: RawCurveParams) -> Result<Self, GroupError> {
        let RawCurveParams { p, a, b, gx, gy, q } = raw;

        if p <= BigUint::from(3u32) || !is_probable_prime(&p, PRIMALITY_ROUNDS) {
            return Err(GroupError::NonPrimeModulus);
        }
        for (name, v) in [("a", &a), ("b", &b), ("gx", &gx), ("gy", &gy)] {
            if v >= &p {
                return Err(GroupError::OutOfRange(name));
            }
        }

        let disc = (BigUint::from(4u32) * a.modpow(&BigUint::from(3u32), &p) + BigUint::from(27u32) * &b * &b) % &p;
        if disc.is_zero() {
            return Err(GroupError::SingularCurve);
        }

        let curve = CurveParams {
            field_width: byte_width(&p),
            scalar_width: byte_width(&q),
            p,
            a,
            b,
            gen: Point::Affine { x: gx, y: gy },
            q,
        };

        if !curve.is_on_curve(&curve.gen) {
            return Err(GroupError::GeneratorNotOnCurve);
        }
        if !is_probable_prime(&curve.q, PRIMALITY_ROUNDS) {
            return Err(GroupError::NonPrimeOrder);
        }
        if !curve.mul_uint(&curve.q, &curve.gen).is_identity() {
            return Err(GroupError::WrongOrder);
        }
        if curve.p < BigUint::from(EXHAUSTIVE_LIMIT) && curve.subgroup_order() != curve.q {
            return Err(GroupError::WrongOrder);
        }

        Ok(curve)
    }

    /// Walks `gen, 2gen, ...` until the identity and returns the step count.
    fn subgroup_order(&self) -> BigUint {
        let mut acc = self.gen.clone();
        let mut n = BigUint::one();
        while !acc.is_identity() {
            acc = self.add(&acc, &self.gen);
            n += 1u32;
        }
        n
    }

    pub fn p(&self) -> &BigUint {
        &self.p
    }

    pub fn a(&self) -> &BigUint {
        &self.a
    }

    pub fn b(&self) -> &BigUint {
        &self.b
    }

    pub fn generator(&self) -> &Point {
        &self.gen
    }

    pub fn order(&self) -> &BigUint {
        &self.q
    }

    /// Bytes per coordinate in a point encoding.
    pub fn field_width(&self) -> usize {
        self.field_width
    }

    /// Bytes per scalar in a fixed-width encoding.
    pub fn scalar_width(&self) -> usize {
        self.scalar_width
    }

    pub fn to_raw(&self) -> RawCurveParams {
        let (gx, gy) = match &self.gen {
            Point::Affine { x, y } => (x.clone(), y.clone()),
            Point::Identity => unreachable!("validated generator is affine"),
        };
        RawCurveParams {
            p: self.p.clone(),
            a: self.a.clone(),
            b: self.b.clone(),
            gx,
            gy,
            q: self.q.clone(),
        }
    }

    // -- scalars --

    pub fn scalar(&self, v: impl Into<BigUint>) -> Scalar {
        Scalar(v.into() % &self.q)
    }

    /// Interprets `bytes` as a big-endian integer and reduces it mod `q`.
    pub fn scalar_from_be_bytes(&self, bytes: &[u8]) -> Scalar {
        self.scalar(BigUint::from_bytes_be(bytes))
    }

    /// Fixed-width (`scalar_width`) big-endian encoding.
    pub fn scalar_to_be_bytes(&self, k: &Scalar) -> Vec<u8> {
        to_fixed_be(&k.0, self.scalar_width)
    }

    pub fn scalar_add(&self, u: &Scalar, v: &Scalar) -> Scalar {
        Scalar((&u.0 + &v.0) % &self.q)
    }

    pub fn scalar_mul(&self, u: &Scalar, v: &Scalar) -> Scalar {
        Scalar((&u.0 * &v.0) % &self.q)
    }

    /// Uniform scalar in `[1, q-1]` by rejection sampling.
    pub fn random_nonzero_scalar<R: RngCore + ?Sized>(&self, rng: &mut R) -> Scalar {
        random_below(rng, &self.q, true).map(Scalar).expect("q > 1")
    }

    // -- points --

    pub fn is_on_curve(&self, u: &Point) -> bool {
        match u {
            Point::Identity => true,
            Point::Affine { x, y } => {
                if x >= &self.p || y >= &self.p {
                    return false;
                }
                let lhs = (y * y) % &self.p;
                let rhs = (x * x * x + &self.a * x + &self.b) % &self.p;
                lhs == rhs
            }
        }
    }

    pub fn negate(&self, u: &Point) -> Point {
        match u {
            Point::Identity => Point::Identity,
            Point::Affine { x, y } => Point::Affine {
                x: x.clone(),
                y: (&self.p - y) % &self.p,
            },
        }
    }

    /// Chord-and-tangent addition. Inputs are assumed valid; see
    /// [`CurveParams::checked_add`] for the validating form.
    pub fn add(&self, u: &Point, v: &Point) -> Point {
        debug_assert!(self.is_on_curve(u) && self.is_on_curve(v));
        let (x1, y1, x2, y2) = match (u, v) {
            (Point::Identity, _) => return v.clone(),
            (_, Point::Identity) => return u.clone(),
            (Point::Affine { x: x1, y: y1 }, Point::Affine { x: x2, y: y2 }) => (x1, y1, x2, y2),
        };
        let p = &self.p;

        let lambda = if x1 == x2 {
            if ((y1 + y2) % p).is_zero() {
                return Point::Identity;
            }
            let num = (BigUint::from(3u32) * x1 * x1 + &self.a) % p;
            let den = (BigUint::from(2u32) * y1) % p;
            num * mod_inverse(&den, p) % p
        } else {
            let num = sub_mod(y2, y1, p);
            let den = sub_mod(x2, x1, p);
            num * mod_inverse(&den, p) % p
        };

        let x3 = sub_mod(&sub_mod(&(&lambda * &lambda), x1, p), x2, p);
        let y3 = sub_mod(&(&lambda * sub_mod(x1, &x3, p)), y1, p);
        Point::Affine { x: x3, y: y3 }
    }

    pub fn checked_add(&self, u: &Point, v: &Point) -> Result<Point, GroupError> {
        if !self.is_on_curve(u) || !self.is_on_curve(v) {
            return Err(GroupError::PointNotOnCurve);
        }
        Ok(self.add(u, v))
    }

    pub fn sub(&self, u: &Point, v: &Point) -> Point {
        self.add(u, &self.negate(v))
    }

    pub fn scalar_mul_point(&self, k: &Scalar, u: &Point) -> Point {
        self.mul_uint(&k.0, u)
    }

    /// Double-and-add over the bits of an unreduced integer, most
    /// significant first. Needed for `q * gen`, which has no [`Scalar`] form.
    pub fn mul_uint(&self, k: &BigUint, u: &Point) -> Point {
        let mut acc = Point::Identity;
        for i in (0..k.bits()).rev() {
            acc = self.add(&acc, &acc);
            if k.bit(i) {
                acc = self.add(&acc, u);
            }
        }
        acc
    }

    /// `k * gen`.
    pub fn base_mul(&self, k: &Scalar) -> Point {
        self.scalar_mul_point(k, &self.gen)
    }

    // -- encoding --

    /// `0x00` for the identity, otherwise `0x04 || x || y` with both
    /// coordinates big-endian at the byte width of `p`.
    pub fn encode_point(&self, u: &Point) -> Vec<u8> {
        match u {
            Point::Identity => vec![0x00],
            Point::Affine { x, y } => {
                let mut out = Vec::with_capacity(1 + 2 * self.field_width);
                out.push(0x04);
                out.extend(to_fixed_be(x, self.field_width));
                out.extend(to_fixed_be(y, self.field_width));
                out
            }
        }
    }

    pub fn decode_point(&self, bytes: &[u8]) -> Result<Point, GroupError> {
        match bytes {
            [0x00] => Ok(Point::Identity),
            [0x04, rest @ ..] if rest.len() == 2 * self.field_width => {
                let (xb, yb) = rest.split_at(self.field_width);
                let x = BigUint::from_bytes_be(xb);
                let y = BigUint::from_bytes_be(yb);
                if x >= self.p || y >= self.p {
                    return Err(GroupError::MalformedEncoding);
                }
                let pt = Point::Affine { x, y };
                if self.is_on_curve(&pt) {
                    Ok(pt)
                } else {
                    Err(GroupError::PointNotOnCurve)
                }
            }
            _ => Err(GroupError::MalformedEncoding),
        }
    }
}

impl FromStr for CurveParams {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CurveParams::validate(s.parse()?)
    }
}

pub(crate) fn byte_width(n: &BigUint) -> usize {
    (n.bits() as usize).div_ceil(8).max(1)
}

pub(crate) fn to_fixed_be(v: &BigUint, width: usize) -> Vec<u8> {
    let raw = v.to_bytes_be();
    let raw: &[u8] = if v.is_zero() { &[] } else { &raw };
    assert!(raw.len() <= width, "value wider than {width} bytes");
    let mut out = vec![0u8; width - raw.len()];
    out.extend_from_slice(raw);
    out
}

fn sub_mod(a: &BigUint, b: &BigUint, m: &BigUint) -> BigUint {
    ((a % m) + m - (b % m)) % m
}

/// Inverse of `a` modulo `m` by the extended Euclidean algorithm.
/// Panics if `a` is not invertible, which for prime `m` means `a = 0`.
fn mod_inverse(a: &BigUint, m: &BigUint) -> BigUint {
    let (mut old_r, mut r) = (BigInt::from_biguint(Sign::Plus, a % m), BigInt::from(m.clone()));
    let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
    while !r.is_zero() {
        let (quot, rem) = old_r.div_rem(&r);
        old_r = std::mem::replace(&mut r, rem);
        let next_s = &old_s - &quot * &s;
        old_s = std::mem::replace(&mut s, next_s);
    }
    assert!(old_r.is_one(), "element is not invertible");
    let m = BigInt::from(m.clone());
    old_s.mod_floor(&m).to_biguint().expect("mod_floor is non-negative")
}

/// Uniform value in `[0, bound)` (or `[1, bound)` when `nonzero`) by
/// sampling `bits(bound)`-bit integers and rejecting out-of-range draws.
pub(crate) fn random_below<R: RngCore + ?Sized>(rng: &mut R, bound: &BigUint, nonzero: bool) -> Option<BigUint> {
    let floor = if nonzero { 1u32 } else { 0 };
    if bound <= &BigUint::from(floor) {
        return None;
    }
    let bits = bound.bits() as usize;
    let mut buf = vec![0u8; bits.div_ceil(8)];
    let excess = buf.len() * 8 - bits;
    loop {
        rng.fill_bytes(&mut buf);
        buf[0] &= 0xff >> excess;
        let v = BigUint::from_bytes_be(&buf);
        if &v < bound && (!nonzero || !v.is_zero()) {
            return Some(v);
        }
    }
}

/// Miller-Rabin with bases drawn from a fixed-seed stream, so the verdict
/// for a given `n` never changes between runs.
pub fn is_probable_prime(n: &BigUint, rounds: u32) -> bool {
    const SMALL: [u32; 18] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61];
    if n < &BigUint::from(2u32) {
        return false;
    }
    for &sp in &SMALL {
        let sp = BigUint::from(sp);
        if n == &sp {
            return true;
        }
        if (n % &sp).is_zero() {
            return false;
        }
    }
    if n < &BigUint::from(61u32 * 61) {
        return true;
    }

    let one = BigUint::one();
    let n_minus_one = n - &one;
    let s = n_minus_one.trailing_zeros().expect("n > 1");
    let d = &n_minus_one >> s;
    let span = n - BigUint::from(3u32);
    let mut rng = ChaCha20Rng::seed_from_u64(0x6d69_6c6c_6572_7261);

    'witness: for _ in 0..rounds {
        let base = random_below(&mut rng, &span, false).expect("span > 0") + 2u32;
        let mut x = base.modpow(&d, n);
        if x == one || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&BigUint::from(2u32), n);
            if x == n_minus_one {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn raw(p: u32, a: u32, b: u32, gx: u32, gy: u32, q: u32) -> RawCurveParams {
        RawCurveParams {
            p: p.into(),
            a: a.into(),
            b: b.into(),
            gx: gx.into(),
            gy: gy.into(),
            q: q.into(),
        }
    }

    #[test]
    fn toy_curve_validates() {
        let c = CurveParams::toy();
        assert_eq!(c.order(), &BigUint::from(19u32));
        assert_eq!(c.field_width(), 1);
        assert_eq!(c.scalar_width(), 1);
    }

    #[test]
    fn validate_rejects_bad_params() {
        assert_eq!(
            CurveParams::validate(raw(16, 2, 2, 5, 1, 19)),
            Err(GroupError::NonPrimeModulus)
        );
        assert_eq!(
            CurveParams::validate(raw(3, 1, 1, 0, 1, 2)),
            Err(GroupError::NonPrimeModulus)
        );
        // 4*0 + 27*0 = 0
        assert_eq!(
            CurveParams::validate(raw(17, 0, 0, 5, 1, 19)),
            Err(GroupError::SingularCurve)
        );
        assert_eq!(
            CurveParams::validate(raw(17, 2, 2, 0, 0, 19)),
            Err(GroupError::GeneratorNotOnCurve)
        );
        assert_eq!(
            CurveParams::validate(raw(17, 2, 2, 5, 1, 17)),
            Err(GroupError::WrongOrder)
        );
        assert_eq!(
            CurveParams::validate(raw(17, 2, 2, 5, 1, 21)),
            Err(GroupError::NonPrimeOrder)
        );
        assert_eq!(
            CurveParams::validate(raw(17, 19, 2, 5, 1, 19)),
            Err(GroupError::OutOfRange("a"))
        );
    }

    #[test]
    fn identity_and_inverse() {
        let c = CurveParams::toy();
        let g = c.generator().clone();
        assert_eq!(c.add(&g, &Point::Identity), g);
        assert_eq!(c.add(&Point::Identity, &g), g);
        assert_eq!(c.add(&g, &c.negate(&g)), Point::Identity);
    }

    #[test]
    fn toy_doubling() {
        let c = CurveParams::toy();
        let g = Point::affine(5u32, 1u32);
        assert_eq!(c.add(&g, &g), Point::affine(6u32, 3u32));
        assert_eq!(c.scalar_mul_point(&c.scalar(2u32), &g), Point::affine(6u32, 3u32));
    }

    #[test]
    fn scalar_mul_edges() {
        let c = CurveParams::toy();
        let g = c.generator().clone();
        assert_eq!(c.base_mul(&c.scalar(0u32)), Point::Identity);
        assert_eq!(c.base_mul(&c.scalar(1u32)), g);
        assert_eq!(c.mul_uint(&19u32.into(), &g), Point::Identity);
        assert_eq!(c.base_mul(&c.scalar(18u32)), c.negate(&g));
        assert_eq!(c.scalar_mul_point(&c.scalar(5u32), &Point::Identity), Point::Identity);
    }

    #[test]
    fn on_curve_checks() {
        let c = CurveParams::toy();
        assert!(c.is_on_curve(&Point::Identity));
        assert!(c.is_on_curve(&Point::affine(5u32, 1u32)));
        assert!(!c.is_on_curve(&Point::affine(0u32, 0u32)));
        // coordinates must be reduced
        assert!(!c.is_on_curve(&Point::affine(22u32, 1u32)));
        assert_eq!(
            c.checked_add(&Point::affine(0u32, 0u32), &Point::Identity),
            Err(GroupError::PointNotOnCurve)
        );
    }

    #[test]
    fn point_encoding() {
        let c = CurveParams::toy();
        assert_eq!(c.encode_point(&Point::Identity), vec![0x00]);
        assert_eq!(c.encode_point(&Point::affine(5u32, 1u32)), vec![0x04, 0x05, 0x01]);
        assert_eq!(c.decode_point(&[0x00]), Ok(Point::Identity));
        assert_eq!(c.decode_point(&[0x04, 0x05, 0x01]), Ok(Point::affine(5u32, 1u32)));
        assert_eq!(c.decode_point(&[0x04, 0x00, 0x00]), Err(GroupError::PointNotOnCurve));
        for bad in [
            &[][..],
            &[0x00, 0x00],
            &[0x04, 0x05],
            &[0x02, 0x05, 0x01],
            &[0x04, 0x16, 0x01],
        ] {
            assert_eq!(c.decode_point(bad), Err(GroupError::MalformedEncoding), "{bad:?}");
        }
    }

    #[test]
    fn param_file_parsing() {
        let text = "# toy\np = 17\na = 2\n\nb = 2\ngx = 5\ngy = 1\nq = 19\n";
        let curve: CurveParams = text.parse().unwrap();
        assert_eq!(curve, CurveParams::toy());
        assert_eq!(
            RawCurveParams::toy().to_file_string().parse::<RawCurveParams>(),
            Ok(RawCurveParams::toy())
        );

        let unknown = format!("{text}h = 1\n");
        assert!(matches!(unknown.parse::<RawCurveParams>(), Err(GroupError::ParamFile(m)) if m.contains("unknown")));
        let missing = "p = 17\na = 2\nb = 2\ngx = 5\ngy = 1\n";
        assert!(matches!(missing.parse::<RawCurveParams>(), Err(GroupError::ParamFile(m)) if m.contains("missing")));
        let dup = format!("{text}p = 17\n");
        assert!(matches!(dup.parse::<RawCurveParams>(), Err(GroupError::ParamFile(m)) if m.contains("duplicate")));
        let neg = text.replace("a = 2", "a = -2");
        assert!(neg.parse::<RawCurveParams>().is_err());
        assert!("p 17".parse::<RawCurveParams>().is_err());
    }

    #[test]
    fn primality() {
        let primes = [2u64, 3, 17, 19, 3727, 65029, 65521, 2_147_483_647];
        let composites = [0u64, 1, 4, 16, 21, 3721, 561, 65535, 2_147_483_649];
        for n in primes {
            assert!(is_probable_prime(&n.into(), 64), "{n}");
        }
        for n in composites {
            assert!(!is_probable_prime(&n.into(), 64), "{n}");
        }
    }

    #[test]
    fn inverse() {
        let m = BigUint::from(17u32);
        for a in 1u32..17 {
            let inv = mod_inverse(&a.into(), &m);
            assert_eq!((inv * a) % &m, BigUint::one());
        }
    }

    #[test]
    fn fixed_width() {
        assert_eq!(to_fixed_be(&BigUint::zero(), 2), vec![0, 0]);
        assert_eq!(to_fixed_be(&BigUint::from(258u32), 3), vec![0, 1, 2]);
    }
}
