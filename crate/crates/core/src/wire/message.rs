use serde_json::{json, Map, Value};

use super::WireError;
use crate::primitives::{FieldElement, Point, Signature, Token, FIELD_ELEMENT_LEN, SIGNATURE_LEN};
use crate::proofsys::{Proof, PROOF_LEN};
use crate::protocol::{AuthRequest, Credential, SessionId};

pub const PROTOCOL_VERSION: u64 = 1;

/// `code` values carried by `ERR` frames.
pub struct ErrorCode;

impl ErrorCode {
    pub const FRAME_TOO_LARGE: &'static str = "frame_too_large";
    pub const UNSUPPORTED_VERSION: &'static str = "unsupported_version";
    pub const MALFORMED: &'static str = "malformed_message";
    pub const UNEXPECTED: &'static str = "unexpected_message";
    pub const REQUIREMENTS_NOT_MET: &'static str = "requirements_not_met";
    pub const EVIDENCE_TOO_LARGE: &'static str = "evidence_too_large";
    pub const INTERNAL: &'static str = "internal_error";
}

#[derive(Clone, PartialEq)]
pub enum Message {
    RegisterReq { evidence: Vec<u8> },
    RegisterResp(Credential),
    AuthReq(AuthRequest),
    AuthGranted { session_id: SessionId },
    AuthRejected { code: String },
    Err { code: String, detail: String },
}

// Registration payloads carry secrets; only the shape is printed.
impl std::fmt::Debug for Message {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Message::RegisterReq { evidence } => write!(f, "RegisterReq({} bytes)", evidence.len()),
            Message::RegisterResp(_) => f.write_str("RegisterResp(..)"),
            Message::AuthReq(req) => write!(f, "AuthReq {{ c: {}, t_exp: {} }}", req.c, req.t_exp),
            Message::AuthGranted { session_id } => write!(f, "AuthGranted({})", session_id.to_hex()),
            Message::AuthRejected { code } => write!(f, "AuthRejected({code})"),
            Message::Err { code, detail } => write!(f, "Err({code}: {detail})"),
        }
    }
}

impl Message {
    pub fn type_name(&self) -> &'static str {
        match self {
            Message::RegisterReq { .. } => "REGISTER_REQ",
            Message::RegisterResp(_) => "REGISTER_RESP",
            Message::AuthReq(_) => "AUTH_REQ",
            Message::AuthGranted { .. } | Message::AuthRejected { .. } => "AUTH_RESP",
            Message::Err { .. } => "ERR",
        }
    }

    pub fn err(code: &str, detail: impl Into<String>) -> Self {
        Message::Err { code: code.into(), detail: detail.into() }
    }

    pub fn to_value(&self) -> Value {
        let mut v = match self {
            Message::RegisterReq { evidence } => json!({ "evidence": hex::encode(evidence) }),
            Message::RegisterResp(cred) => json!({
                "token": hex::encode(cred.token.value().to_bytes()),
                "t_exp": cred.t_exp,
                "sig": hex::encode(cred.signature.to_bytes()),
                "pk": hex::encode(cred.operator_pk.to_bytes()),
            }),
            Message::AuthReq(req) => json!({
                "proof": hex::encode(req.proof.to_bytes()),
                "c": req.c,
                "t_exp": req.t_exp,
                "pk": hex::encode(req.operator_pk.to_bytes()),
                "out": hex::encode(req.out.to_bytes()),
            }),
            Message::AuthGranted { session_id } => json!({ "granted": true, "session_id": session_id.to_hex() }),
            Message::AuthRejected { code } => json!({ "granted": false, "code": code }),
            Message::Err { code, detail } => json!({ "code": code, "detail": detail }),
        };
        let obj = v.as_object_mut().expect("object literal");
        obj.insert("type".into(), Value::from(self.type_name()));
        obj.insert("v".into(), Value::from(PROTOCOL_VERSION));
        v
    }

    /// Canonical bytes: sorted keys, compact.
    pub fn encode(&self) -> Vec<u8> {
        serde_json::to_vec(&self.to_value()).expect("json values always serialize")
    }

    /// Parses a payload, rejecting anything that would not re-encode to the
    /// same bytes.
    pub fn decode(bytes: &[u8]) -> Result<Self, WireError> {
        let value: Value = serde_json::from_slice(bytes).map_err(|e| WireError::malformed(e.to_string()))?;
        let obj = value.as_object().ok_or_else(|| WireError::malformed("not an object"))?;
        let version = obj.get("v").and_then(Value::as_u64).ok_or_else(|| WireError::malformed("missing v"))?;
        if version != PROTOCOL_VERSION {
            return Err(WireError::UnsupportedVersion(version));
        }
        let ty = obj.get("type").and_then(Value::as_str).ok_or_else(|| WireError::malformed("missing type"))?;
        let f = Fields(obj);
        let msg = match ty {
            "REGISTER_REQ" => {
                f.expect_keys(&["evidence"])?;
                Message::RegisterReq { evidence: f.hex("evidence", None)? }
            }
            "REGISTER_RESP" => {
                f.expect_keys(&["token", "t_exp", "sig", "pk"])?;
                let token = Token::from_field(f.field("token")?).ok_or_else(|| WireError::malformed("token range"))?;
                Message::RegisterResp(Credential {
                    token,
                    t_exp: f.u64("t_exp")?,
                    signature: Signature::from_bytes(&f.hex("sig", Some(SIGNATURE_LEN))?)
                        .map_err(|e| WireError::malformed(format!("sig: {e}")))?,
                    operator_pk: f.point("pk")?,
                })
            }
            "AUTH_REQ" => {
                f.expect_keys(&["proof", "c", "t_exp", "pk", "out"])?;
                let proof = Proof::from_bytes(&f.hex("proof", Some(PROOF_LEN))?)
                    .map_err(|e| WireError::malformed(format!("proof: {e}")))?;
                Message::AuthReq(AuthRequest {
                    proof,
                    c: f.u64("c")?,
                    t_exp: f.u64("t_exp")?,
                    operator_pk: f.point("pk")?,
                    out: f.field("out")?,
                })
            }
            "AUTH_RESP" => match obj.get("granted").and_then(Value::as_bool) {
                Some(true) => {
                    f.expect_keys(&["granted", "session_id"])?;
                    let s = f.str("session_id")?;
                    let session_id = SessionId::from_hex(s).ok_or_else(|| WireError::malformed("session_id"))?;
                    Message::AuthGranted { session_id }
                }
                Some(false) => {
                    f.expect_keys(&["granted", "code"])?;
                    Message::AuthRejected { code: f.str("code")?.to_owned() }
                }
                None => return Err(WireError::malformed("granted")),
            },
            "ERR" => {
                f.expect_keys(&["code", "detail"])?;
                Message::Err { code: f.str("code")?.to_owned(), detail: f.str("detail")?.to_owned() }
            }
            other => return Err(WireError::malformed(format!("unknown type {other:?}"))),
        };
        if msg.encode() != bytes {
            return Err(WireError::malformed("non-canonical encoding"));
        }
        Ok(msg)
    }
}

struct Fields<'a>(&'a Map<String, Value>);

impl Fields<'_> {
    fn expect_keys(&self, keys: &[&str]) -> Result<(), WireError> {
        if self.0.len() != keys.len() + 2 || !keys.iter().all(|k| self.0.contains_key(*k)) {
            return Err(WireError::malformed("unexpected field set"));
        }
        Ok(())
    }

    fn str(&self, key: &str) -> Result<&str, WireError> {
        self.0.get(key).and_then(Value::as_str).ok_or_else(|| WireError::malformed(format!("{key}: expected string")))
    }

    fn u64(&self, key: &str) -> Result<u64, WireError> {
        self.0.get(key).and_then(Value::as_u64).ok_or_else(|| WireError::malformed(format!("{key}: expected u64")))
    }

    fn hex(&self, key: &str, len: Option<usize>) -> Result<Vec<u8>, WireError> {
        let bytes = hex::decode(self.str(key)?).map_err(|_| WireError::malformed(format!("{key}: bad hex")))?;
        match len {
            Some(n) if bytes.len() != n => Err(WireError::malformed(format!("{key}: expected {n} bytes"))),
            _ => Ok(bytes),
        }
    }

    fn field(&self, key: &str) -> Result<FieldElement, WireError> {
        FieldElement::from_bytes(&self.hex(key, Some(FIELD_ELEMENT_LEN))?)
            .map_err(|e| WireError::malformed(format!("{key}: {e}")))
    }

    fn point(&self, key: &str) -> Result<Point, WireError> {
        Point::from_bytes(&self.hex(key, Some(Point::ENCODED_LEN))?)
            .map_err(|e| WireError::malformed(format!("{key}: {e}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_messages_are_canonical() {
        let msgs = [
            Message::RegisterReq { evidence: b"secret".to_vec() },
            Message::AuthGranted { session_id: SessionId([7; 16]) },
            Message::AuthRejected { code: "expired".into() },
            Message::err("frame_too_large", "2097152 bytes"),
        ];
        for m in msgs {
            let bytes = m.encode();
            assert_eq!(Message::decode(&bytes).unwrap(), m);
        }
        assert_eq!(
            Message::RegisterReq { evidence: vec![0xab] }.encode(),
            br#"{"evidence":"ab","type":"REGISTER_REQ","v":1}"#
        );
        assert_eq!(
            Message::AuthRejected { code: "replay_detected".into() }.encode(),
            br#"{"code":"replay_detected","granted":false,"type":"AUTH_RESP","v":1}"#
        );
    }

    #[test]
    fn rejects_non_canonical_and_bad_versions() {
        for bad in [
            &br#"{"v":1,"type":"REGISTER_REQ","evidence":"ab"}"#[..],
            br#"{"evidence":"AB","type":"REGISTER_REQ","v":1}"#,
            br#"{"evidence": "ab","type":"REGISTER_REQ","v":1}"#,
            br#"{"evidence":"ab","extra":1,"type":"REGISTER_REQ","v":1}"#,
            br#"{"evidence":"abc","type":"REGISTER_REQ","v":1}"#,
            br#"{"evidence":"ab","type":"NOPE","v":1}"#,
            br#"{"evidence":"ab","type":"REGISTER_REQ"}"#,
            br#"[1]"#,
            b"\xff",
        ] {
            assert!(matches!(Message::decode(bad), Err(WireError::Malformed(_))), "{}", String::from_utf8_lossy(bad));
        }
        assert!(matches!(
            Message::decode(br#"{"evidence":"ab","type":"REGISTER_REQ","v":2}"#),
            Err(WireError::UnsupportedVersion(2))
        ));
    }
}
