//! The two-message key agreement.
//!
//! Each side sends `ID || Y || (h, mu, R) || t` to the other. The two
//! messages share one format and one code path; which party is the server
//! only matters when the session key is derived, where the server's
//! identifier is always hashed first.
//!
//! A recipient checks, in order:
//! 1. timestamp freshness against its own logical clock,
//! 2. the identity-based signature, with itself as the intended recipient,
//!
//! and then derives `K = H3(ID_server || ID_client || y' * Y)`.

use std::fmt;
use std::str::FromStr;

use rand_core::RngCore;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::{CurveParams, Point, Scalar};
use crate::hash::{tagged_hash, SESSION_KEY_TAG};
use crate::ibs::{self, EntityKeyPair, Identity, Signature, SignedFields};

pub mod wire;

pub use wire::{decode_message, encode_message, field_spans, WireField};

/// Freshness tolerance, in ticks, when none is configured.
pub const DEFAULT_WINDOW: u64 = 10;

/// Logical time. Parties never read a wall clock.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Timestamp(pub u64);

impl Timestamp {
    pub fn to_be_bytes(self) -> [u8; 8] {
        self.0.to_be_bytes()
    }

    pub fn saturating_add(self, ticks: u64) -> Timestamp {
        Timestamp(self.0.saturating_add(ticks))
    }
}

impl fmt::Display for Timestamp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Which form of the signature hash both parties use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Variant {
    /// As originally published: the timestamp is outside the signature.
    Flawed,
    /// The timestamp is an extra input to the signature hash.
    Fixed,
}

impl Variant {
    pub const ALL: [Variant; 2] = [Variant::Flawed, Variant::Fixed];
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Flawed => "FLAWED",
            Variant::Fixed => "FIXED",
        })
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "flawed" => Ok(Variant::Flawed),
            "fixed" => Ok(Variant::Fixed),
            other => Err(format!("unknown variant `{other}` (expected flawed or fixed)")),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ProtocolError {
    #[error("timestamp is older than the freshness window")]
    StaleTimestamp,
    #[error("timestamp is further ahead than the freshness window")]
    FutureTimestamp,
    #[error("signature does not verify")]
    BadSignature,
    #[error("malformed message: {0}")]
    MalformedMessage(String),
    #[error("encoded point is not on the curve")]
    PointNotOnCurve,
    #[error("peer ephemeral point is the identity or off the curve")]
    InvalidPeerPoint,
}

impl ProtocolError {
    /// Stable name used in transcripts and reports.
    pub fn name(&self) -> &'static str {
        match self {
            ProtocolError::StaleTimestamp => "StaleTimestamp",
            ProtocolError::FutureTimestamp => "FutureTimestamp",
            ProtocolError::BadSignature => "BadSignature",
            ProtocolError::MalformedMessage(_) => "MalformedMessage",
            ProtocolError::PointNotOnCurve => "PointNotOnCurve",
            ProtocolError::InvalidPeerPoint => "InvalidPeerPoint",
        }
    }
}

/// `ID || Y || sigma || t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProtocolMessage {
    pub sender: Identity,
    pub ephemeral: Point,
    pub signature: Signature,
    pub timestamp: Timestamp,
}

/// The ephemeral private key `y` behind a message's `Y`. Consumed by
/// [`derive_session_key`].
#[derive(Clone, PartialEq, Eq)]
pub struct EphemeralSecret(Scalar);

impl EphemeralSecret {
    /// Wraps a known scalar. Returns `None` for zero.
    pub fn from_scalar(y: Scalar) -> Option<Self> {
        (!y.is_zero()).then_some(EphemeralSecret(y))
    }

    pub fn scalar(&self) -> &Scalar {
        &self.0
    }
}

impl fmt::Debug for EphemeralSecret {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("EphemeralSecret(..)")
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SessionKey([u8; 32]);

impl SessionKey {
    pub fn as_bytes(&self) -> &[u8; 32] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        hex::encode(self.0)
    }
}

impl fmt::Debug for SessionKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SessionKey({})", self.to_hex())
    }
}

/// What a recipient learns from an accepted message.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifiedPeer {
    pub peer: Identity,
    pub ephemeral: Point,
}

/// Long-lived configuration of one participant.
#[derive(Debug, Clone)]
pub struct PartyConfig {
    pub keys: EntityKeyPair,
    pub master_public: Point,
    pub variant: Variant,
    pub window: u64,
}

/// Builds and signs a message to `peer`, returning the secret `y` behind
/// its `Y`. The signing nonce `x` is dropped here.
pub fn build_message<R: RngCore + ?Sized>(
    curve: &CurveParams,
    keys: &EntityKeyPair,
    peer: &Identity,
    now: Timestamp,
    variant: Variant,
    rng: &mut R,
) -> (ProtocolMessage, EphemeralSecret) {
    let y = curve.random_nonzero_scalar(rng);
    let ephemeral = curve.base_mul(&y);
    let fields = SignedFields {
        sender: keys.id(),
        recipient: peer,
        ephemeral: &ephemeral,
        timestamp: now,
    };
    let (signature, _commitment) = ibs::sign(curve, keys, &fields, variant, rng);
    let msg = ProtocolMessage {
        sender: keys.id().clone(),
        ephemeral,
        signature,
        timestamp: now,
    };
    (msg, EphemeralSecret(y))
}

/// True iff `now - window <= t <= now + window`.
pub fn check_freshness(t: Timestamp, now: Timestamp, window: u64) -> bool {
    freshness(t, now, window).is_ok()
}

/// Like [`check_freshness`], but says which side of the window `t` fell on.
pub fn freshness(t: Timestamp, now: Timestamp, window: u64) -> Result<(), ProtocolError> {
    if t.0 < now.0.saturating_sub(window) {
        Err(ProtocolError::StaleTimestamp)
    } else if t.0 > now.0.saturating_add(window) {
        Err(ProtocolError::FutureTimestamp)
    } else {
        Ok(())
    }
}

/// Freshness first, then the signature with `self_id` as recipient.
pub fn verify_message(
    curve: &CurveParams,
    msg: &ProtocolMessage,
    self_id: &Identity,
    master_public: &Point,
    now: Timestamp,
    window: u64,
    variant: Variant,
) -> Result<VerifiedPeer, ProtocolError> {
    freshness(msg.timestamp, now, window)?;
    let fields = SignedFields {
        sender: &msg.sender,
        recipient: self_id,
        ephemeral: &msg.ephemeral,
        timestamp: msg.timestamp,
    };
    if !ibs::verify_signature(curve, &msg.signature, &fields, master_public, variant) {
        return Err(ProtocolError::BadSignature);
    }
    Ok(VerifiedPeer {
        peer: msg.sender.clone(),
        ephemeral: msg.ephemeral.clone(),
    })
}

/// `H3(server_id || client_id || encode(y * Y_peer))`.
pub fn derive_session_key(
    curve: &CurveParams,
    server_id: &Identity,
    client_id: &Identity,
    own: EphemeralSecret,
    peer_ephemeral: &Point,
) -> Result<SessionKey, ProtocolError> {
    if peer_ephemeral.is_identity() || !curve.is_on_curve(peer_ephemeral) {
        return Err(ProtocolError::InvalidPeerPoint);
    }
    let shared = curve.scalar_mul_point(&own.0, peer_ephemeral);
    let d = tagged_hash(
        SESSION_KEY_TAG,
        &[server_id.as_bytes(), client_id.as_bytes(), &curve.encode_point(&shared)],
    );
    Ok(SessionKey(d.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hash::tagged_hash_input;
    use crate::ibs::{extract_key, pkg_setup};
    use crate::rng::seeded;

    fn id(s: &str) -> Identity {
        Identity::new(s).unwrap()
    }

    struct Setup {
        curve: CurveParams,
        master_public: Point,
        server: EntityKeyPair,
        client: EntityKeyPair,
    }

    fn setup(seed: u64) -> Setup {
        let curve = CurveParams::toy();
        let mut rng = seeded(seed);
        let master = pkg_setup(&curve, &mut rng);
        let server = extract_key(&curve, &master, &id("server-1"), &mut rng);
        let client = extract_key(&curve, &master, &id("sensor-7"), &mut rng);
        Setup {
            curve,
            master_public: master.public().clone(),
            server,
            client,
        }
    }

    #[test]
    fn freshness_window() {
        assert!(check_freshness(Timestamp(100), Timestamp(105), 10));
        assert!(!check_freshness(Timestamp(100), Timestamp(120), 10));
        assert!(!check_freshness(Timestamp(130), Timestamp(100), 10));
        assert!(check_freshness(Timestamp(110), Timestamp(100), 10));
        assert!(check_freshness(Timestamp(90), Timestamp(100), 10));
        assert_eq!(
            freshness(Timestamp(89), Timestamp(100), 10),
            Err(ProtocolError::StaleTimestamp)
        );
        assert_eq!(
            freshness(Timestamp(111), Timestamp(100), 10),
            Err(ProtocolError::FutureTimestamp)
        );
        assert!(check_freshness(Timestamp(0), Timestamp(3), 10));
        assert!(check_freshness(Timestamp(u64::MAX), Timestamp(u64::MAX - 1), 10));
    }

    #[test]
    fn honest_message_accepted() {
        let s = setup(1);
        let (msg, _) = build_message(
            &s.curve,
            &s.server,
            s.client.id(),
            Timestamp(50),
            Variant::Fixed,
            &mut seeded(2),
        );
        let peer = verify_message(
            &s.curve,
            &msg,
            s.client.id(),
            &s.master_public,
            Timestamp(50),
            10,
            Variant::Fixed,
        )
        .unwrap();
        assert_eq!(&peer.peer, s.server.id());
        assert_eq!(peer.ephemeral, msg.ephemeral);
    }

    #[test]
    fn wrong_recipient_rejected() {
        let s = setup(1);
        let (msg, _) = build_message(
            &s.curve,
            &s.server,
            s.client.id(),
            Timestamp(50),
            Variant::Flawed,
            &mut seeded(2),
        );
        let r = verify_message(
            &s.curve,
            &msg,
            &id("sensor-8"),
            &s.master_public,
            Timestamp(50),
            10,
            Variant::Flawed,
        );
        assert_eq!(r, Err(ProtocolError::BadSignature));
    }

    #[test]
    fn timestamp_rewrite_by_variant() {
        let s = setup(4);
        for variant in Variant::ALL {
            let (mut msg, _) = build_message(
                &s.curve,
                &s.server,
                s.client.id(),
                Timestamp(0),
                variant,
                &mut seeded(8),
            );
            msg.timestamp = Timestamp(1000);
            let r = verify_message(
                &s.curve,
                &msg,
                s.client.id(),
                &s.master_public,
                Timestamp(1000),
                10,
                variant,
            );
            match variant {
                Variant::Flawed => assert!(r.is_ok()),
                Variant::Fixed => assert_eq!(r, Err(ProtocolError::BadSignature)),
            }
        }
    }

    #[test]
    fn stale_replay_rejected_before_signature() {
        let s = setup(4);
        let (msg, _) = build_message(
            &s.curve,
            &s.server,
            s.client.id(),
            Timestamp(0),
            Variant::Fixed,
            &mut seeded(8),
        );
        let r = verify_message(
            &s.curve,
            &msg,
            s.client.id(),
            &s.master_public,
            Timestamp(1000),
            10,
            Variant::Fixed,
        );
        assert_eq!(r, Err(ProtocolError::StaleTimestamp));
    }

    #[test]
    fn build_is_deterministic() {
        let s = setup(5);
        let a = build_message(
            &s.curve,
            &s.server,
            s.client.id(),
            Timestamp(1),
            Variant::Fixed,
            &mut seeded(6),
        )
        .0;
        let b = build_message(
            &s.curve,
            &s.server,
            s.client.id(),
            Timestamp(1),
            Variant::Fixed,
            &mut seeded(6),
        )
        .0;
        assert_eq!(encode_message(&s.curve, &a), encode_message(&s.curve, &b));
    }

    #[test]
    fn session_keys_agree_and_order_matters() {
        let s = setup(7);
        let mut rng = seeded(70);
        let (ms, ys) = build_message(
            &s.curve,
            &s.server,
            s.client.id(),
            Timestamp(1),
            Variant::Flawed,
            &mut rng,
        );
        let (mc, yc) = build_message(
            &s.curve,
            &s.client,
            s.server.id(),
            Timestamp(1),
            Variant::Flawed,
            &mut rng,
        );
        let ks = derive_session_key(&s.curve, s.server.id(), s.client.id(), ys.clone(), &mc.ephemeral).unwrap();
        let kc = derive_session_key(&s.curve, s.server.id(), s.client.id(), yc, &ms.ephemeral).unwrap();
        assert_eq!(ks, kc);
        let swapped = derive_session_key(&s.curve, s.client.id(), s.server.id(), ys, &mc.ephemeral).unwrap();
        assert_ne!(ks, swapped);
    }

    #[test]
    fn toy_session_key_hashes_six_g() {
        let c = CurveParams::toy();
        let (srv, cli) = (id("server-1"), id("sensor-7"));
        let ys = EphemeralSecret::from_scalar(c.scalar(2u32)).unwrap();
        let yc = EphemeralSecret::from_scalar(c.scalar(3u32)).unwrap();
        let g = c.generator().clone();
        // 6G by repeated addition
        let six_g = (1..6).fold(g.clone(), |acc, _| c.add(&acc, &g));
        let expected = crate::hash::tagged_hash(SESSION_KEY_TAG, &[b"server-1", b"sensor-7", &c.encode_point(&six_g)]);
        let ks = derive_session_key(&c, &srv, &cli, ys, &c.base_mul(&c.scalar(3u32))).unwrap();
        let kc = derive_session_key(&c, &srv, &cli, yc, &c.base_mul(&c.scalar(2u32))).unwrap();
        assert_eq!(ks.as_bytes(), expected.as_bytes());
        assert_eq!(kc, ks);
        assert_eq!(
            tagged_hash_input(SESSION_KEY_TAG, &[b"server-1", b"sensor-7", &c.encode_point(&six_g)]).len(),
            1 + 2 + 8 + 2 + 8 + 2 + 3
        );
    }

    #[test]
    fn invalid_peer_point() {
        let c = CurveParams::toy();
        let y = EphemeralSecret::from_scalar(c.scalar(2u32)).unwrap();
        let (a, b) = (id("a"), id("b"));
        assert_eq!(
            derive_session_key(&c, &a, &b, y.clone(), &Point::Identity),
            Err(ProtocolError::InvalidPeerPoint)
        );
        assert_eq!(
            derive_session_key(&c, &a, &b, y, &Point::affine(0u32, 0u32)),
            Err(ProtocolError::InvalidPeerPoint)
        );
        assert!(EphemeralSecret::from_scalar(c.scalar(0u32)).is_none());
    }

    #[test]
    fn variant_parsing() {
        assert_eq!("Flawed".parse::<Variant>(), Ok(Variant::Flawed));
        assert_eq!("fixed".parse::<Variant>(), Ok(Variant::Fixed));
        assert!("other".parse::<Variant>().is_err());
    }
}
