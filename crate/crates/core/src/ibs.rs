//! El Gamal-type identity-based signatures issued by a private key
//! generator (PKG).
//!
//! The PKG holds a master pair `(s_pkg, S_pkg = s_pkg * G)`. An entity with
//! identifier `ID` receives `(s, R)` where `R = r * G`, `c = H1(ID || R)` and
//! `s = r + c * s_pkg mod q`. Anyone can then check
//! `s * G = R + c * S_pkg` from public data alone.
//!
//! A signature over `(ID, ID', Y [, t])` is the triple `(h, mu, R)` with
//! `h = H2(ID || ID' || Y || R || X [|| t])`, `X = x * G` and
//! `mu = x + h * s mod q`. The verifier recovers `X' = mu * G - h * (R + c * S_pkg)`
//! and compares `H2(... || X' ...)` against `h`.
//!
//! `s` is a scalar: the verification equation only balances when
//! `s = r + c * s_pkg mod q`, so it is never a curve point.
//!
//! Under [`Variant::Flawed`] the timestamp is not hashed, and a signature
//! stays valid whatever timestamp travels beside it.

use std::fmt;

use rand_core::RngCore;
use thiserror::Error;

use crate::group::{CurveParams, Point, Scalar};
use crate::hash::{tagged_hash, Digest256, IDENTITY_TAG, SIGNATURE_TAG};
use crate::protocol::{Timestamp, Variant};

pub const MAX_IDENTITY_LEN: usize = 255;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IbsError {
    #[error("identity must be 1..=255 bytes, got {0}")]
    InvalidIdentity(usize),
    #[error("master secret must be in [1, q-1]")]
    ZeroMasterSecret,
}

/// An entity identifier.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Identity(Vec<u8>);

impl Identity {
    pub fn new(value: impl Into<Vec<u8>>) -> Result<Self, IbsError> {
        let value = value.into();
        if value.is_empty() || value.len() > MAX_IDENTITY_LEN {
            return Err(IbsError::InvalidIdentity(value.len()));
        }
        Ok(Identity(value))
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&String::from_utf8_lossy(&self.0))
    }
}

impl fmt::Debug for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Identity({:?})", String::from_utf8_lossy(&self.0))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MasterKeyPair {
    secret: Scalar,
    public: Point,
}

impl MasterKeyPair {
    pub fn from_secret(curve: &CurveParams, secret: Scalar) -> Result<Self, IbsError> {
        if secret.is_zero() {
            return Err(IbsError::ZeroMasterSecret);
        }
        let public = curve.base_mul(&secret);
        Ok(MasterKeyPair { secret, public })
    }

    pub fn secret(&self) -> &Scalar {
        &self.secret
    }

    /// `S_pkg`, published to every participant.
    pub fn public(&self) -> &Point {
        &self.public
    }
}

/// An entity's long-term key pair `(s, R)` together with its identifier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntityKeyPair {
    id: Identity,
    secret: Scalar,
    public: Point,
}

impl EntityKeyPair {
    /// Assembles a key pair from stored parts without checking it; see
    /// [`EntityKeyPair::is_consistent`].
    pub fn from_parts(id: Identity, secret: Scalar, public: Point) -> Self {
        EntityKeyPair { id, secret, public }
    }

    pub fn id(&self) -> &Identity {
        &self.id
    }

    pub fn secret(&self) -> &Scalar {
        &self.secret
    }

    /// `R`.
    pub fn public(&self) -> &Point {
        &self.public
    }

    /// Checks `s * G = R + c * S_pkg`.
    pub fn is_consistent(&self, curve: &CurveParams, master_public: &Point) -> bool {
        !self.public.is_identity()
            && curve.is_on_curve(&self.public)
            && curve.base_mul(&self.secret) == expected_public(curve, &self.id, &self.public, master_public)
    }
}

/// `R + c * S_pkg`: the public image of an entity's private key.
pub fn expected_public(curve: &CurveParams, id: &Identity, r: &Point, master_public: &Point) -> Point {
    let c = identity_hash(curve, id, r);
    curve.add(r, &curve.scalar_mul_point(&c, master_public))
}

/// `(h, mu, R)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signature {
    pub h: Digest256,
    pub mu: Scalar,
    pub r: Point,
}

/// The values a signature covers, apart from the signer's own `R` and `X`.
#[derive(Debug, Clone, Copy)]
pub struct SignedFields<'a> {
    pub sender: &'a Identity,
    pub recipient: &'a Identity,
    pub ephemeral: &'a Point,
    pub timestamp: Timestamp,
}

/// Generates the PKG master pair with `s_pkg` uniform in `[1, q-1]`.
pub fn pkg_setup<R: RngCore + ?Sized>(curve: &CurveParams, rng: &mut R) -> MasterKeyPair {
    MasterKeyPair::from_secret(curve, curve.random_nonzero_scalar(rng)).expect("sampled secret is non-zero")
}

/// `c = H1(ID || R) mod q`.
pub fn identity_hash(curve: &CurveParams, id: &Identity, r: &Point) -> Scalar {
    let d = tagged_hash(IDENTITY_TAG, &[id.as_bytes(), &curve.encode_point(r)]);
    curve.scalar_from_be_bytes(d.as_bytes())
}

/// Issues `(s, R)` for `id`.
pub fn extract_key<R: RngCore + ?Sized>(
    curve: &CurveParams,
    master: &MasterKeyPair,
    id: &Identity,
    rng: &mut R,
) -> EntityKeyPair {
    let r = curve.random_nonzero_scalar(rng);
    let public = curve.base_mul(&r);
    let c = identity_hash(curve, id, &public);
    let secret = curve.scalar_add(&r, &curve.scalar_mul(&c, master.secret()));
    EntityKeyPair {
        id: id.clone(),
        secret,
        public,
    }
}

/// `H2(ID || ID' || Y || R || X)`, with `t` appended as an 8-byte
/// big-endian field under [`Variant::Fixed`].
pub fn signature_hash(
    curve: &CurveParams,
    fields: &SignedFields<'_>,
    r: &Point,
    commitment: &Point,
    variant: Variant,
) -> Digest256 {
    let y = curve.encode_point(fields.ephemeral);
    let r = curve.encode_point(r);
    let x = curve.encode_point(commitment);
    let t = fields.timestamp.to_be_bytes();
    let mut input: Vec<&[u8]> = vec![fields.sender.as_bytes(), fields.recipient.as_bytes(), &y, &r, &x];
    if variant == Variant::Fixed {
        input.push(&t);
    }
    tagged_hash(SIGNATURE_TAG, &input)
}

/// Signs with a fresh nonce `x` and returns the signature with `X = x * G`.
pub fn sign<R: RngCore + ?Sized>(
    curve: &CurveParams,
    keys: &EntityKeyPair,
    fields: &SignedFields<'_>,
    variant: Variant,
    rng: &mut R,
) -> (Signature, Point) {
    let nonce = curve.random_nonzero_scalar(rng);
    sign_with_nonce(curve, keys, fields, variant, &nonce)
}

/// Deterministic core of [`sign`]. Reusing a nonce across two messages
/// leaks `s`; this exists so tests can pin `x`.
pub fn sign_with_nonce(
    curve: &CurveParams,
    keys: &EntityKeyPair,
    fields: &SignedFields<'_>,
    variant: Variant,
    nonce: &Scalar,
) -> (Signature, Point) {
    debug_assert_eq!(fields.sender, keys.id(), "signer must be the sender");
    let commitment = curve.base_mul(nonce);
    let h = signature_hash(curve, fields, keys.public(), &commitment, variant);
    let hq = curve.scalar_from_be_bytes(h.as_bytes());
    let mu = curve.scalar_add(nonce, &curve.scalar_mul(&hq, keys.secret()));
    let sig = Signature {
        h,
        mu,
        r: keys.public().clone(),
    };
    (sig, commitment)
}

/// `X' = mu * G - h * (R + c * S_pkg)`. Equals the signer's `X` for an
/// honest signature.
pub fn recover_commitment(curve: &CurveParams, sig: &Signature, sender: &Identity, master_public: &Point) -> Point {
    let hq = curve.scalar_from_be_bytes(sig.h.as_bytes());
    let signer_public = expected_public(curve, sender, &sig.r, master_public);
    curve.sub(&curve.base_mul(&sig.mu), &curve.scalar_mul_point(&hq, &signer_public))
}

/// Recomputes `h*` over the recovered commitment and compares all 256 bits.
pub fn verify_signature(
    curve: &CurveParams,
    sig: &Signature,
    fields: &SignedFields<'_>,
    master_public: &Point,
    variant: Variant,
) -> bool {
    if sig.r.is_identity() || !curve.is_on_curve(&sig.r) || !curve.is_on_curve(fields.ephemeral) {
        return false;
    }
    let recovered = recover_commitment(curve, sig, fields.sender, master_public);
    signature_hash(curve, fields, &sig.r, &recovered, variant) == sig.h
}
