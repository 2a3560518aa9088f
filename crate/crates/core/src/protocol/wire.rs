//! Byte encoding of [`ProtocolMessage`].
//!
//! ```text
//! 0x01                       version
//! len16 || sender_id
//! len16 || encode_point(Y)
//! len16 || h                 32 bytes
//! len16 || mu                big-endian, byte width of q
//! len16 || encode_point(R)
//! len16 || t                 8 bytes big-endian
//! ```
//!
//! `len16` is a 2-byte big-endian length. The timestamp is therefore always
//! the final 10 bytes of a valid encoding.

use std::ops::Range;

use num_bigint::BigUint;

use super::{ProtocolError, ProtocolMessage, Timestamp};
use crate::group::{CurveParams, GroupError};
use crate::hash::Digest256;
use crate::ibs::{Identity, Signature};

pub const WIRE_VERSION: u8 = 0x01;

/// Length of the trailing timestamp field, prefix included.
pub const TIMESTAMP_FIELD_LEN: usize = 2 + 8;

/// The six length-prefixed fields, in wire order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WireField {
    SenderId,
    Ephemeral,
    SignatureHash,
    Mu,
    SignerPublic,
    Timestamp,
}

impl WireField {
    pub const ALL: [WireField; 6] = [
        WireField::SenderId,
        WireField::Ephemeral,
        WireField::SignatureHash,
        WireField::Mu,
        WireField::SignerPublic,
        WireField::Timestamp,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            WireField::SenderId => "sender_id",
            WireField::Ephemeral => "Y",
            WireField::SignatureHash => "h",
            WireField::Mu => "mu",
            WireField::SignerPublic => "R",
            WireField::Timestamp => "t",
        }
    }
}

fn malformed(why: impl Into<String>) -> ProtocolError {
    ProtocolError::MalformedMessage(why.into())
}

fn push_field(out: &mut Vec<u8>, field: &[u8]) {
    let len = u16::try_from(field.len()).expect("wire field fits a 16-bit length");
    out.extend_from_slice(&len.to_be_bytes());
    out.extend_from_slice(field);
}

pub fn encode_message(curve: &CurveParams, msg: &ProtocolMessage) -> Vec<u8> {
    let mut out = vec![WIRE_VERSION];
    push_field(&mut out, msg.sender.as_bytes());
    push_field(&mut out, &curve.encode_point(&msg.ephemeral));
    push_field(&mut out, msg.signature.h.as_bytes());
    push_field(&mut out, &curve.scalar_to_be_bytes(&msg.signature.mu));
    push_field(&mut out, &curve.encode_point(&msg.signature.r));
    push_field(&mut out, &msg.timestamp.to_be_bytes());
    out
}

/// Byte ranges of each field's value (length prefix excluded), indexed by
/// [`WireField::index`]. Checks only the framing, not the contents.
pub fn field_spans(bytes: &[u8]) -> Result<[Range<usize>; 6], ProtocolError> {
    match bytes.first() {
        None => return Err(malformed("empty input")),
        Some(&WIRE_VERSION) => {}
        Some(v) => return Err(malformed(format!("unsupported version 0x{v:02x}"))),
    }
    let mut pos = 1;
    let mut spans: [Range<usize>; 6] = Default::default();
    for field in WireField::ALL {
        let prefix = bytes
            .get(pos..pos + 2)
            .ok_or_else(|| malformed(format!("truncated length of {}", field.name())))?;
        let len = u16::from_be_bytes([prefix[0], prefix[1]]) as usize;
        pos += 2;
        if bytes.len() < pos + len {
            return Err(malformed(format!("truncated {}", field.name())));
        }
        spans[field.index()] = pos..pos + len;
        pos += len;
    }
    if pos != bytes.len() {
        return Err(malformed(format!("{} trailing bytes", bytes.len() - pos)));
    }
    Ok(spans)
}

fn decode_point_field(
    curve: &CurveParams,
    bytes: &[u8],
    field: WireField,
) -> Result<crate::group::Point, ProtocolError> {
    let pt = curve.decode_point(bytes).map_err(|e| match e {
        GroupError::PointNotOnCurve => ProtocolError::PointNotOnCurve,
        _ => malformed(format!("bad point encoding in {}", field.name())),
    })?;
    if pt.is_identity() {
        return Err(malformed(format!("{} is the identity", field.name())));
    }
    Ok(pt)
}

/// Strict inverse of [`encode_message`]: non-canonical scalars, identity
/// points, wrong widths and trailing bytes are all rejected.
pub fn decode_message(curve: &CurveParams, bytes: &[u8]) -> Result<ProtocolMessage, ProtocolError> {
    let spans = field_spans(bytes)?;
    let field = |f: WireField| &bytes[spans[f.index()].clone()];

    let sender = Identity::new(field(WireField::SenderId)).map_err(|e| malformed(format!("sender_id: {e}")))?;

    let ephemeral = decode_point_field(curve, field(WireField::Ephemeral), WireField::Ephemeral)?;

    let h: [u8; 32] = field(WireField::SignatureHash)
        .try_into()
        .map_err(|_| malformed("h must be 32 bytes"))?;

    let mu_bytes = field(WireField::Mu);
    if mu_bytes.len() != curve.scalar_width() {
        return Err(malformed(format!("mu must be {} bytes", curve.scalar_width())));
    }
    let mu = BigUint::from_bytes_be(mu_bytes);
    if &mu >= curve.order() {
        return Err(malformed("mu is not reduced modulo q"));
    }
    let mu = curve.scalar(mu);

    let r = decode_point_field(curve, field(WireField::SignerPublic), WireField::SignerPublic)?;

    let t: [u8; 8] = field(WireField::Timestamp)
        .try_into()
        .map_err(|_| malformed("t must be 8 bytes"))?;

    Ok(ProtocolMessage {
        sender,
        ephemeral,
        signature: Signature { h: Digest256(h), mu, r },
        timestamp: Timestamp(u64::from_be_bytes(t)),
    })
}
