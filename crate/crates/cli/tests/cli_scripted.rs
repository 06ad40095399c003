use std::io::{BufRead, BufReader};
use std::path::Path;
use std::process::{Child, Command, Output, Stdio};

use sans_cli::exit;
use serde_json::Value;

fn sans(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sans"))
        .current_dir(dir)
        .args(args)
        .env("SANS_REGISTRATION_POLICY", "accept-all")
        .output()
        .expect("spawn sans")
}

fn code(o: &Output) -> u8 {
    o.status.code().expect("exited") as u8
}

fn json_of(o: &Output) -> Value {
    let text = String::from_utf8(o.stdout.clone()).unwrap();
    let line = text.trim_end();
    let v: Value = serde_json::from_str(line).unwrap_or_else(|e| panic!("{e}: {line:?}"));
    // Canonical: re-encoding reproduces the bytes.
    assert_eq!(v.to_string(), line);
    v
}

fn now() -> u64 {
    std::time::SystemTime::now().duration_since(std::time::UNIX_EPOCH).unwrap().as_secs()
}

fn prepared() -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&sans(dir.path(), &["keygen", "--json"])), exit::OK);
    assert_eq!(code(&sans(dir.path(), &["setup", "--json"])), exit::OK);
    dir
}

#[test]
fn setup_prove_verify_chain() {
    let dir = prepared();
    let d = dir.path();
    let t = now().to_string();
    let issued = sans(d, &["issue", "--json", "--now", &t]);
    assert_eq!(code(&issued), exit::OK);
    assert!(json_of(&issued)["t_exp"].as_u64().unwrap() > now());
    let proved = sans(d, &["prove", "--json", "--now", &t]);
    assert_eq!(code(&proved), exit::OK, "{}", String::from_utf8_lossy(&proved.stderr));
    let verified = sans(d, &["verify", "--json", "--now", &t]);
    assert_eq!(code(&verified), exit::OK);
    assert_eq!(json_of(&verified)["granted"], Value::Bool(true));

    let circuit = sans(d, &["circuit", "--json"]);
    let c = json_of(&circuit);
    assert_eq!(c["public_inputs"], serde_json::json!(["c", "pk_x", "pk_y", "t_exp", "out"]));

    // Ten minutes later the same request is stale.
    let later = (now() + 600).to_string();
    let stale = sans(d, &["verify", "--json", "--now", &later]);
    assert_eq!(code(&stale), exit::STALE_CHALLENGE);
    assert_eq!(json_of(&stale)["error"], "stale_challenge");
}

#[test]
fn verify_error_classes_have_distinct_codes() {
    let dir = prepared();
    let d = dir.path();
    let t = now().to_string();
    assert_eq!(code(&sans(d, &["issue", "--now", &t])), exit::OK);
    assert_eq!(code(&sans(d, &["prove", "--now", &t])), exit::OK);

    // A verifying key whose header names another circuit.
    let mut vk = std::fs::read(d.join("sans.vk")).unwrap();
    vk[8] ^= 0xff;
    std::fs::write(d.join("other.vk"), &vk).unwrap();
    let o = sans(d, &["verify", "--vk", "other.vk", "--now", &t]);
    assert_eq!(code(&o), exit::FINGERPRINT_MISMATCH);

    // Verifying key from a different setup run.
    let other = tempfile::tempdir().unwrap();
    assert_eq!(code(&sans(other.path(), &["setup"])), exit::OK);
    let o = sans(d, &["verify", "--vk", other.path().join("sans.vk").to_str().unwrap(), "--now", &t]);
    assert_eq!(code(&o), exit::INVALID_PROOF);

    // Different operator key.
    assert_eq!(code(&sans(d, &["keygen", "--out", "other.key"])), exit::OK);
    let o = sans(d, &["verify", "--key", "other.key", "--now", &t]);
    assert_eq!(code(&o), exit::WRONG_OPERATOR_KEY);

    // Expired.
    let cred = std::fs::read(d.join("credential.bin")).unwrap();
    let expired = (u64::from_le_bytes(cred[42..50].try_into().unwrap()) + 10).to_string();
    let o = sans(d, &["prove", "--out", "old.json", "--now", &expired]);
    assert_eq!(code(&o), exit::OK);
    assert_eq!(code(&sans(d, &["verify", "--request", "old.json", "--now", &expired])), exit::EXPIRED);

    // Tampered request and broken inputs.
    let req = std::fs::read_to_string(d.join("auth_req.json")).unwrap();
    let mut v: Value = serde_json::from_str(&req).unwrap();
    v["c"] = Value::from(v["c"].as_u64().unwrap() + 1);
    std::fs::write(d.join("bad.json"), v.to_string()).unwrap();
    assert_eq!(code(&sans(d, &["verify", "--request", "bad.json", "--now", &t])), exit::INVALID_PROOF);
    std::fs::write(d.join("junk.json"), "{}").unwrap();
    assert_eq!(code(&sans(d, &["verify", "--request", "junk.json", "--now", &t])), exit::MALFORMED_ARTIFACT);
    assert_eq!(code(&sans(d, &["verify", "--request", "missing.json"])), exit::IO);
    std::fs::write(d.join("short.key"), [1u8; 5]).unwrap();
    assert_eq!(code(&sans(d, &["issue", "--key", "short.key"])), exit::MALFORMED_ARTIFACT);
    assert_eq!(code(&sans(d, &["verify", "--bogus-flag"])), exit::USAGE);
    assert_eq!(code(&sans(d, &["register"])), exit::USAGE);
}

struct Server(Child);

impl Drop for Server {
    fn drop(&mut self) {
        let _ = self.0.kill();
        let _ = self.0.wait();
    }
}

fn start_server(dir: &Path) -> (Server, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_sans"))
        .current_dir(dir)
        .args(["serve", "--bind", "127.0.0.1:0", "--json"])
        .env("SANS_REGISTRATION_POLICY", "shared-secret")
        .env("SANS_REGISTRATION_SECRET", "slice-contract-42")
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut line = String::new();
    BufReader::new(child.stdout.take().unwrap()).read_line(&mut line).unwrap();
    let v: Value = serde_json::from_str(line.trim()).unwrap_or_else(|e| panic!("{e}: {line:?}"));
    let addr = v["listening"].as_str().unwrap().to_owned();
    (Server(child), addr)
}

#[test]
fn authenticate_twice_against_live_daemon() {
    let dir = prepared();
    let d = dir.path();
    let (mut server, addr) = start_server(d);

    let denied = sans(d, &["register", "--server", &addr, "--evidence", "wrong"]);
    assert_eq!(code(&denied), exit::REQUIREMENTS_NOT_MET);
    let reg = sans(d, &["register", "--server", &addr, "--evidence", "slice-contract-42", "--json"]);
    assert_eq!(code(&reg), exit::OK, "{}", String::from_utf8_lossy(&reg.stderr));

    // Both attempts use the same minute.
    let t = now().to_string();
    let first = sans(d, &["authenticate", "--server", &addr, "--json", "--now", &t]);
    assert_eq!(code(&first), exit::OK, "{}", String::from_utf8_lossy(&first.stderr));
    assert_eq!(json_of(&first)["session_id"].as_str().unwrap().len(), 32);
    let second = sans(d, &["authenticate", "--server", &addr, "--json", "--now", &t]);
    assert_eq!(code(&second), exit::REPLAY_DETECTED);
    assert_eq!(json_of(&second)["error"], "replay_detected");

    let closed = sans(d, &["authenticate", "--server", "127.0.0.1:1"]);
    assert_eq!(code(&closed), exit::TRANSPORT);

    // The daemon log never carries the credential or the evidence.
    let _ = server.0.kill();
    let out = server.0.wait_with_output_ref();
    let cred = std::fs::read(d.join("credential.bin")).unwrap();
    let token_hex = hex::encode(&cred[10..42]);
    let sig_hex = hex::encode(&cred[74..170]);
    assert!(out.contains("granted"), "{out}");
    for secret in [token_hex.as_str(), sig_hex.as_str(), "slice-contract-42", &hex::encode("slice-contract-42")] {
        assert!(!out.contains(secret), "log leaked {secret}");
    }
}

trait WaitLog {
    fn wait_with_output_ref(&mut self) -> String;
}

impl WaitLog for Child {
    fn wait_with_output_ref(&mut self) -> String {
        let _ = self.wait();
        let mut s = String::new();
        if let Some(mut e) = self.stderr.take() {
            let _ = std::io::Read::read_to_string(&mut e, &mut s);
        }
        s
    }
}
