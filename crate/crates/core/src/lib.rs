//! Identity-based authenticated key agreement over short Weierstrass
//! curves, in its originally published form and with the timestamp bound
//! into the signature, plus a deterministic simulator for the replay and
//! ephemeral-key-compromise attacks on the published form.
//!
//! Modules, bottom up:
//!
//! - [`group`]: curve parameters, points, scalars, point encoding.
//! - [`hash`]: the three domain-separated SHA-256 instances.
//! - [`ibs`]: PKG setup, key extraction, signing and verification.
//! - [`protocol`]: message construction and checks, session keys, wire codec.
//! - [`selftest`]: quick invariant sweeps.
//! - [`sim`]: scripted honest runs and attacks with JSON transcripts.
//! - [`cli`]: the `aka` command-line front end.
//!
//! Runnable walkthroughs live in `examples/`.

pub mod cli;
pub mod group;
pub mod hash;
pub mod ibs;
pub mod protocol;
pub mod rng;
pub mod selftest;
pub mod sim;

pub use group::{CurveParams, GroupError, Point, RawCurveParams, Scalar};
pub use ibs::{EntityKeyPair, Identity, MasterKeyPair, Signature};
pub use protocol::{EphemeralSecret, ProtocolError, ProtocolMessage, SessionKey, Timestamp, Variant, VerifiedPeer};
