//! Domain-separated SHA-256 instances for the identity hash, the signature
//! hash and the session-key hash.
//!
//! Input layout: `tag || len(f1) || f1 || len(f2) || f2 || ...` where each
//! `len` is a 2-byte big-endian field length.

use std::fmt;

use sha2::{Digest as _, Sha256};

/// Tag for the hash binding an identity to its long-term public point.
pub const IDENTITY_TAG: u8 = 0x01;
/// Tag for the signature hash.
pub const SIGNATURE_TAG: u8 = 0x02;
/// Tag for session-key derivation.
pub const SESSION_KEY_TAG: u8 = 0x03;

/// A full-width 256-bit digest.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Digest256(pub [u8; 32]);

impl Digest256 {
    pub fn as_bytes(&self) -> &[u8; 32] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        hex::encode(self.0)
    }
}

impl fmt::Debug for Digest256 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digest256({})", self.to_hex())
    }
}

/// Hashes `fields` under `tag`, length-prefixing every field.
pub fn tagged_hash(tag: u8, fields: &[&[u8]]) -> Digest256 {
    let mut out = [0u8; 32];
    out.copy_from_slice(&Sha256::digest(tagged_hash_input(tag, fields)));
    Digest256(out)
}

/// The exact byte string fed to SHA-256 by [`tagged_hash`].
pub fn tagged_hash_input(tag: u8, fields: &[&[u8]]) -> Vec<u8> {
    let mut buf = vec![tag];
    for f in fields {
        let len = u16::try_from(f.len()).expect("hash field longer than 65535 bytes");
        buf.extend_from_slice(&len.to_be_bytes());
        buf.extend_from_slice(f);
    }
    buf
}
