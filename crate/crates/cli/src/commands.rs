use std::io::Write;
use std::net::ToSocketAddrs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use rand::rngs::OsRng;
use rand::RngCore;
use serde_json::{json, Value};

use crate::bench;
use crate::error::CliError;
use sans_core::circuit::{build_circuit, AuthCircuitLayout};
use sans_core::primitives::{keygen, SigningKeypair};
use sans_core::proofsys::{setup, ProvingKey, VerifyingKey};
use sans_core::protocol::{
    authenticate_prove, issue_credential, AuthRequest, Clock, Credential, Decision, SystemClock, VerifierConfig,
    VerifierState,
};
use sans_core::wire::{self, Message};

pub const OPERATOR_KEY_LEN: usize = 32;

#[derive(Debug, Parser)]
#[command(name = "sans", version, about = "Self-sovereign network-slice authentication")]
pub struct Cli {
    /// Print one canonical JSON object instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate an operator signing key.
    Keygen {
        #[arg(long, default_value = "operator.key")]
        out: PathBuf,
    },
    /// Run a trusted setup for the authentication circuit.
    Setup {
        #[arg(long, default_value = "sans.pk")]
        pk_out: PathBuf,
        #[arg(long, default_value = "sans.vk")]
        vk_out: PathBuf,
    },
    /// Issue a credential offline with the operator key.
    Issue {
        #[arg(long, default_value = "operator.key")]
        key: PathBuf,
        #[arg(long, default_value = "credential.bin")]
        out: PathBuf,
        /// Validity period in seconds; expiry is rounded to a UTC midnight.
        #[arg(long, default_value_t = 30 * 24 * 3600)]
        validity: u64,
        #[command(flatten)]
        clock: ClockArgs,
    },
    /// Produce an authentication request (AUTH_REQ frame payload).
    Prove {
        #[arg(long, default_value = "credential.bin")]
        credential: PathBuf,
        #[arg(long, default_value = "sans.pk")]
        pk_params: PathBuf,
        #[arg(long, default_value = "auth_req.json")]
        out: PathBuf,
        #[command(flatten)]
        clock: ClockArgs,
    },
    /// Decide an authentication request as a fresh verifier would.
    Verify {
        #[arg(long, default_value = "sans.vk")]
        vk: PathBuf,
        #[arg(long, default_value = "operator.key")]
        key: PathBuf,
        #[arg(long, default_value = "auth_req.json")]
        request: PathBuf,
        #[arg(long)]
        config: Option<PathBuf>,
        #[command(flatten)]
        clock: ClockArgs,
    },
    /// Describe the circuit layout.
    Circuit,
    /// Run the operator daemon.
    Serve {
        #[arg(long, default_value = "127.0.0.1:7400")]
        bind: String,
        #[arg(long, default_value = "sans.vk")]
        vk: PathBuf,
        #[arg(long, default_value = "operator.key")]
        key: PathBuf,
        #[arg(long)]
        config: Option<PathBuf>,
    },
    /// Register with a running daemon and store the credential.
    Register {
        #[arg(long, default_value = "127.0.0.1:7400")]
        server: String,
        #[command(flatten)]
        evidence: EvidenceArgs,
        #[arg(long, default_value = "credential.bin")]
        out: PathBuf,
    },
    /// Authenticate to a running daemon.
    Authenticate {
        #[arg(long, default_value = "127.0.0.1:7400")]
        server: String,
        #[arg(long, default_value = "credential.bin")]
        credential: PathBuf,
        #[arg(long, default_value = "sans.pk")]
        pk_params: PathBuf,
        #[command(flatten)]
        clock: ClockArgs,
    },
    /// Measure setup, prove and verify.
    Bench {
        #[arg(long, default_value_t = 10)]
        iterations: usize,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long, default_value = "bench.csv")]
        out: PathBuf,
    },
}

#[derive(Debug, Args)]
pub struct ClockArgs {
    /// Use this Unix time instead of the system clock.
    #[arg(long)]
    pub now: Option<u64>,
}

impl ClockArgs {
    fn now(&self) -> Result<u64, CliError> {
        match self.now {
            Some(t) => Ok(t),
            None => SystemClock.now().map_err(|e| CliError::Internal(e.to_string())),
        }
    }
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct EvidenceArgs {
    #[arg(long)]
    pub evidence: Option<String>,
    #[arg(long)]
    pub evidence_file: Option<PathBuf>,
}

/// Result of a command: human text plus the JSON form.
pub struct Output {
    pub text: String,
    pub json: Value,
}

fn read(path: &Path) -> Result<Vec<u8>, CliError> {
    std::fs::read(path).map_err(|e| CliError::io(path, e))
}

fn write(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    std::fs::write(path, bytes).map_err(|e| CliError::io(path, e))
}

/// Writes a file readable only by the owner where the platform allows it.
fn write_secret(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    let mut opts = std::fs::OpenOptions::new();
    opts.write(true).create(true).truncate(true);
    #[cfg(unix)]
    std::os::unix::fs::OpenOptionsExt::mode(&mut opts, 0o600);
    let mut f = opts.open(path).map_err(|e| CliError::io(path, e))?;
    f.write_all(bytes).map_err(|e| CliError::io(path, e))
}

pub fn load_operator_key(path: &Path) -> Result<SigningKeypair, CliError> {
    let bytes = read(path)?;
    let seed: [u8; OPERATOR_KEY_LEN] = bytes.as_slice().try_into().map_err(|_| CliError::Malformed {
        what: "operator key",
        detail: format!("expected {OPERATOR_KEY_LEN} bytes, got {}", bytes.len()),
    })?;
    Ok(keygen(&seed))
}

pub fn load_credential(path: &Path) -> Result<Credential, CliError> {
    Ok(Credential::from_bytes(&read(path)?)?)
}

fn load_layout() -> Result<AuthCircuitLayout, CliError> {
    Ok(build_circuit()?)
}

fn load_config(path: Option<&Path>) -> Result<VerifierConfig, CliError> {
    let cfg = match path {
        Some(p) => VerifierConfig::from_file(p)?,
        None => VerifierConfig::default(),
    };
    Ok(cfg.apply_env()?)
}

fn load_request(path: &Path) -> Result<AuthRequest, CliError> {
    match Message::decode(&read(path)?)? {
        Message::AuthReq(req) => Ok(req),
        other => Err(CliError::Malformed {
            what: "request",
            detail: format!("expected AUTH_REQ, got {}", other.type_name()),
        }),
    }
}

fn runtime() -> Result<tokio::runtime::Runtime, CliError> {
    tokio::runtime::Builder::new_multi_thread().enable_all().build().map_err(|e| CliError::Internal(e.to_string()))
}

fn check_addr(addr: &str) -> Result<(), CliError> {
    addr.to_socket_addrs().map(|_| ()).map_err(|e| CliError::Usage(format!("bad address {addr}: {e}")))
}

fn operator_pk_hex(kp: &SigningKeypair) -> String {
    hex::encode(kp.public_key().to_bytes())
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Keygen { out } => {
            let mut seed = [0u8; OPERATOR_KEY_LEN];
            OsRng.try_fill_bytes(&mut seed).map_err(|e| CliError::Internal(e.to_string()))?;
            write_secret(out, &seed)?;
            let pk = operator_pk_hex(&keygen(&seed));
            Ok(Output {
                text: format!("operator key written to {}\npublic key: {pk}", out.display()),
                json: json!({ "key": out.display().to_string(), "pk": pk }),
            })
        }
        Command::Setup { pk_out, vk_out } => {
            let layout = load_layout()?;
            let artifacts = setup(&layout, &mut OsRng)?;
            write(pk_out, &artifacts.proving_key.to_bytes())?;
            write(vk_out, &artifacts.verifying_key.to_bytes())?;
            let fp = hex::encode(layout.fingerprint());
            Ok(Output {
                text: format!(
                    "proving key: {}\nverifying key: {}\nfingerprint: {fp}",
                    pk_out.display(),
                    vk_out.display()
                ),
                json: json!({ "pk": pk_out.display().to_string(), "vk": vk_out.display().to_string(), "fingerprint": fp, "constraints": layout.constraint_count() }),
            })
        }
        Command::Issue { key, out, validity, clock } => {
            let kp = load_operator_key(key)?;
            let cred = issue_credential(&kp, *validity, clock.now()?, &mut OsRng)?;
            write_secret(out, &cred.to_bytes())?;
            Ok(Output {
                text: format!("credential written to {} (expires {})", out.display(), cred.t_exp),
                json: json!({ "credential": out.display().to_string(), "t_exp": cred.t_exp, "pk": operator_pk_hex(&kp) }),
            })
        }
        Command::Prove { credential, pk_params, out, clock } => {
            let cred = load_credential(credential)?;
            let layout = load_layout()?;
            let params = ProvingKey::from_bytes(&read(pk_params)?, Some(&layout.fingerprint()))?;
            let req = authenticate_prove(&cred, clock.now()?, &layout, &params, &mut OsRng)?;
            write(out, &Message::AuthReq(req.clone()).encode())?;
            Ok(Output {
                text: format!("request for bucket {} written to {}", req.c, out.display()),
                json: json!({ "request": out.display().to_string(), "c": req.c, "out": hex::encode(req.out.to_bytes()) }),
            })
        }
        Command::Verify { vk, key, request, config, clock } => {
            let layout = load_layout()?;
            let vk = VerifyingKey::from_bytes(&read(vk)?, Some(&layout.fingerprint()))?;
            let kp = load_operator_key(key)?;
            let mut cfg = load_config(config.as_deref())?;
            cfg.registration_policy = "accept-all".into();
            let req = load_request(request)?;
            let state = VerifierState::new(vk, kp, cfg)?;
            match state.authenticate_at(&req, clock.now()?) {
                Decision::Granted(_) => {
                    Ok(Output { text: "granted".into(), json: json!({ "granted": true, "c": req.c }) })
                }
                Decision::Rejected(r) => Err(CliError::Rejected(r)),
            }
        }
        Command::Circuit => {
            let layout = load_layout()?;
            Ok(Output {
                text: layout.describe().trim_end().to_owned(),
                json: json!({
                    "constraints": layout.constraint_count(),
                    "public_inputs": layout.public_input_names(),
                    "fingerprint": hex::encode(layout.fingerprint()),
                }),
            })
        }
        Command::Serve { bind, vk, key, config } => {
            check_addr(bind)?;
            let layout = load_layout()?;
            let vk = VerifyingKey::from_bytes(&read(vk)?, Some(&layout.fingerprint()))?;
            let kp = load_operator_key(key)?;
            let cfg = load_config(config.as_deref())?;
            let state = Arc::new(VerifierState::new(vk, kp, cfg)?);
            runtime()?.block_on(async move {
                let listener = wire::bind(bind).await?;
                let addr = listener.local_addr().map_err(|e| CliError::Internal(e.to_string()))?;
                // Announce the bound address on stdout so wrappers can find an
                // ephemeral port.
                let announce = if cli.json {
                    json!({ "listening": addr.to_string() }).to_string()
                } else {
                    format!("listening on {addr}")
                };
                println!("{announce}");
                let _ = std::io::stdout().flush();
                let sweeper = wire::spawn_sweeper(state.clone(), std::time::Duration::from_secs(30));
                let result = wire::serve(state, listener, async {
                    let _ = tokio::signal::ctrl_c().await;
                })
                .await;
                sweeper.abort();
                result.map_err(CliError::from)
            })?;
            Ok(Output { text: "stopped".into(), json: json!({ "stopped": true }) })
        }
        Command::Register { server, evidence, out } => {
            let bytes = match (&evidence.evidence, &evidence.evidence_file) {
                (Some(s), _) => s.as_bytes().to_vec(),
                (None, Some(p)) => read(p)?,
                (None, None) => return Err(CliError::Usage("evidence required".into())),
            };
            let cred = runtime()?.block_on(wire::client_register(server, &bytes))?;
            write_secret(out, &cred.to_bytes())?;
            Ok(Output {
                text: format!("credential written to {} (expires {})", out.display(), cred.t_exp),
                json: json!({ "credential": out.display().to_string(), "t_exp": cred.t_exp }),
            })
        }
        Command::Authenticate { server, credential, pk_params, clock } => {
            let cred = load_credential(credential)?;
            let layout = load_layout()?;
            let params = ProvingKey::from_bytes(&read(pk_params)?, Some(&layout.fingerprint()))?;
            let now = clock.now()?;
            let session = runtime()?.block_on(wire::client_authenticate_at(server, &cred, now, &layout, &params))?;
            Ok(Output {
                text: format!("granted, session {}", session.to_hex()),
                json: json!({ "granted": true, "session_id": session.to_hex() }),
            })
        }
        Command::Bench { iterations, threads, out } => {
            let report = bench::run(*iterations, *threads)?;
            let file = std::fs::File::create(out).map_err(|e| CliError::io(out, e))?;
            bench::write_csv(&report.records, file)?;
            Ok(Output {
                text: format!("{}csv written to {}", bench::summary(&report), out.display()),
                json: json!({
                    "csv": out.display().to_string(),
                    "constraint_count": report.constraint_count,
                    "reference_constraints": bench::REFERENCE_CONSTRAINTS,
                    "records": serde_json::to_value(&report.records).map_err(|e| CliError::Internal(e.to_string()))?,
                }),
            })
        }
    }
}

/// Parses, runs and prints; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => crate::exit::OK,
                _ => crate::exit::USAGE,
            };
        }
    };
    if matches!(cli.command, Command::Serve { .. }) {
        let filter = tracing_subscriber::EnvFilter::try_from_default_env()
            .unwrap_or_else(|_| tracing_subscriber::EnvFilter::new("info"));
        let _ = tracing_subscriber::fmt().with_env_filter(filter).with_writer(std::io::stderr).try_init();
    }
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", out.json);
            } else {
                println!("{}", out.text);
            }
            crate::exit::OK
        }
        Err(e) => {
            if cli.json {
                println!("{}", json!({ "error": e.code(), "detail": e.to_string() }));
            } else {
                eprintln!("error: {e}");
            }
            e.exit_code()
        }
    }
}
