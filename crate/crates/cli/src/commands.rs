//! Command implementations. Each returns rendered output and whether every
//! contract checked along the way held.

use ev_core::ExactError;
use ev_lattice::persist::{from_json, to_json};
use ev_lattice::{build, LatticeBox, LatticeError, LatticeStore, K};
use ev_modnum::{ModError, ModularPoint};
use ev_painleve::{
    evi_residual, factor_match_tqf, klr_map, ph_residual, py_residual, q_lattice, state_at,
    tqf_indices, LVector, PError,
};
use ev_tsystem::families::{family_eval, Family, FamilyValue};
use ev_tsystem::{tk, tnk, yseq, KIndex, Limits, TError};
use serde_json::{json, Value};

use crate::exit;
use crate::suites::{self, Check, Config};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// A command that could not run.
#[derive(Debug, Clone, PartialEq)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn new(code: i32, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

/// Rendered output of a command that ran.
#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub text: String,
    pub ok: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, ok: true }
    }
}

fn t_code(e: &TError) -> i32 {
    match e {
        TError::SizeBound(_) => exit::SIZE_BOUND,
        TError::InvalidIndex(_) | TError::ParityError(_) | TError::MZeroRequired => exit::BAD_FLAGS,
        _ => exit::CONTRACT,
    }
}

fn exact_code(_: &ExactError) -> i32 {
    exit::CONTRACT
}

fn lattice_code(e: &LatticeError) -> i32 {
    match e {
        LatticeError::T(t) => t_code(t),
        LatticeError::Exact(x) => exact_code(x),
        LatticeError::Io(_) => exit::IO,
        LatticeError::Format(_) | LatticeError::OddIndex(_) => exit::BAD_FLAGS,
        _ => exit::CONTRACT,
    }
}

fn p_code(e: &PError) -> i32 {
    match e {
        PError::Lattice(l) => lattice_code(l),
        PError::Exact(x) => exact_code(x),
        _ => exit::CONTRACT,
    }
}

fn mod_code(e: &ModError) -> i32 {
    match e {
        ModError::DomainError(_) => exit::BAD_FLAGS,
        ModError::T(t) => t_code(t),
        ModError::P(p) => p_code(p),
        ModError::Lattice(l) => lattice_code(l),
        _ => exit::CONTRACT,
    }
}

impl From<TError> for Failure {
    fn from(e: TError) -> Self {
        Failure::new(t_code(&e), e.to_string())
    }
}

impl From<LatticeError> for Failure {
    fn from(e: LatticeError) -> Self {
        Failure::new(lattice_code(&e), e.to_string())
    }
}

impl From<PError> for Failure {
    fn from(e: PError) -> Self {
        Failure::new(p_code(&e), e.to_string())
    }
}

impl From<ModError> for Failure {
    fn from(e: ModError) -> Self {
        Failure::new(mod_code(&e), e.to_string())
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn k4(k: &[i64]) -> Result<K, Failure> {
    k.try_into()
        .map_err(|_| Failure::new(exit::BAD_FLAGS, format!("expected 4 entries, got {}", k.len())))
}

pub fn compute_t(k: &[i64], limits: &Limits, fmt: Format) -> Result<Output, Failure> {
    let k = k4(k)?;
    let v = tk(k, limits)?;
    let idx = KIndex::m_zero(k)?;
    Ok(Output::ok(match fmt {
        Format::Text => format!("{v}"),
        Format::Json => pretty(&json!({"object": "t", "k": k, "n": idx.n, "value": v.to_string()})),
    }))
}

pub fn compute_big_t(n: i64, k: &[i64], limits: &Limits, fmt: Format) -> Result<Output, Failure> {
    let idx = KIndex::new(k4(k)?, n)?;
    let v = tnk(&idx, limits)?.value;
    if v.is_zero() {
        return Err(Failure::new(exit::CONTRACT, format!("{idx} is the zero function")));
    }
    Ok(Output::ok(match fmt {
        Format::Text => format!("{v}"),
        Format::Json => pretty(&json!({
            "object": "T",
            "k": idx.k,
            "n": idx.n,
            "m": idx.m(),
            "value": v.to_string(),
        })),
    }))
}

pub fn compute_y(k: i64, fmt: Format) -> Result<Output, Failure> {
    let y = yseq(k);
    Ok(Output::ok(match fmt {
        Format::Text => format!("{y}"),
        Format::Json => pretty(&json!({"object": "Y", "k": k, "value": y.to_string()})),
    }))
}

pub fn compute_family(name: &str, n: i64, limits: &Limits, fmt: Format) -> Result<Output, Failure> {
    let family = Family::from_name(name).ok_or_else(|| {
        let names: Vec<&str> = Family::ALL.iter().map(|f| f.name()).collect();
        Failure::new(
            exit::BAD_FLAGS,
            format!("unknown family {name:?}; one of {}", names.join(", ")),
        )
    })?;
    let r = family_eval(family, n, limits)?;
    let value = match &r.value {
        FamilyValue::Poly(p) => p.to_string(),
        FamilyValue::Frac(f) => f.to_string(),
        FamilyValue::Zeta(z) => z.to_string(),
        FamilyValue::Univariate(p) => p.to_string(),
    };
    Ok(Output::ok(match fmt {
        Format::Text => match r.substitution {
            Some(s) => format!("{value}\n({s})"),
            None => value,
        },
        Format::Json => pretty(&json!({
            "object": family.name(),
            "n": n,
            "value": value,
            "substitution": r.substitution,
        })),
    }))
}

fn render_store(store: &LatticeStore, fmt: Format) -> String {
    match fmt {
        Format::Json => to_json(store),
        Format::Text => store
            .entries
            .iter()
            .map(|(k, e)| {
                format!(
                    "t^({},{},{},{}) = {}  [{:?}]",
                    k[0], k[1], k[2], k[3], e.value, e.provenance
                )
            })
            .collect::<Vec<_>>()
            .join("\n"),
    }
}

pub fn lattice_build(radius: i64, fmt: Format) -> Result<Output, Failure> {
    if radius < 1 {
        return Err(Failure::new(exit::BAD_FLAGS, "--box must be at least 1"));
    }
    let store = build(LatticeBox::cube(radius))?;
    Ok(Output::ok(render_store(&store, fmt)))
}

pub fn lattice_load(text: &str, fmt: Format) -> Result<Output, Failure> {
    let store = from_json(text)?;
    Ok(Output::ok(render_store(&store, fmt)))
}

pub fn pvi_q(l: &[i64], fmt: Format) -> Result<Output, Failure> {
    let l = LVector::new(k4(l)?);
    let q = q_lattice(&l)?;
    Ok(Output::ok(match fmt {
        Format::Text => format!("{q}"),
        Format::Json => pretty(&json!({"object": "q", "l": l.l, "value": q.to_string()})),
    }))
}

pub fn pvi_verify(l: &[i64], fmt: Format) -> Result<Output, Failure> {
    let l = LVector::new(k4(l)?);
    let s = state_at(&l)?;
    let py = py_residual(&s)?;
    let (ph1, ph2) = ph_residual(&s);
    let evi = evi_residual(&s)?;
    let ok = py.is_zero() && ph1.is_zero() && ph2.is_zero() && evi.is_zero();
    let text = match fmt {
        Format::Text => format!(
            "PVI residual: {py}\nHamiltonian system residuals: {ph1}, {ph2}\nE_VI residual: {evi}\n{}",
            if ok { "PASS" } else { "FAIL" }
        ),
        Format::Json => pretty(&json!({
            "l": l.l,
            "pvi": py.to_string(),
            "hamiltonian": [ph1.to_string(), ph2.to_string()],
            "evi": evi.to_string(),
            "pass": ok,
        })),
    };
    Ok(Output { text, ok })
}

pub fn pvi_factor_match(l: &[i64], fmt: Format) -> Result<Output, Failure> {
    let l = LVector::new(k4(l)?);
    let mut needed: Vec<K> = tqf_indices(&l).to_vec();
    needed.push(klr_map(&l));
    let store = build(suites::covering_box(&needed))?;
    let ok = factor_match_tqf(&l, &store)?;
    let text = match fmt {
        Format::Text => format!(
            "factors t^{:?}: {}",
            tqf_indices(&l),
            if ok { "PASS" } else { "FAIL" }
        ),
        Format::Json => pretty(&json!({"l": l.l, "factors": tqf_indices(&l), "pass": ok})),
    };
    Ok(Output { text, ok })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Span,
    Schrodinger,
    Tep,
    Trt,
    Qd,
    Tz,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Span => "span",
            Suite::Schrodinger => "schrodinger",
            Suite::Tep => "tep",
            Suite::Trt => "trt",
            Suite::Qd => "qd",
            Suite::Tz => "tz",
        }
    }

    pub fn tolerance(self) -> f64 {
        match self {
            Suite::Span => suites::SPAN_TOL,
            Suite::Schrodinger => suites::SCHRODINGER_TOL,
            Suite::Tep => suites::TEP_TOL,
            Suite::Trt | Suite::Qd => suites::TRT_TOL,
            Suite::Tz => suites::TZ_TOL,
        }
    }
}

fn contract(message: String) -> Failure {
    Failure::new(exit::CONTRACT, message)
}

pub fn num_verify(
    suite: Suite,
    tau: &(String, String),
    l: &[i64],
    cfg: &Config,
    fmt: Format,
) -> Result<Output, Failure> {
    let mp = ModularPoint::parse(&tau.0, &tau.1, cfg.digits)?;
    let residual = match suite {
        Suite::Tz => suites::tz_residual(&mp).map_err(contract)?,
        Suite::Span => suites::span_residual(&mp, cfg).map_err(contract)?,
        Suite::Schrodinger => suites::schrodinger_residual(&mp, cfg).map_err(contract)?,
        Suite::Tep => suites::tep_residual(&mp).map_err(contract)?,
        Suite::Trt | Suite::Qd => {
            let ls = [k4(l)?];
            let store = suites::trt_store(&ls).map_err(contract)?;
            let (trt, qd) = suites::trt_residuals(&mp, &ls, &store).map_err(contract)?;
            if suite == Suite::Trt {
                trt
            } else {
                qd
            }
        }
    };
    let ok = residual < suite.tolerance();
    let text = match fmt {
        Format::Text => format!(
            "{} at tau = {}+{}i, {} digits: residual {residual:.3e} {}",
            suite.name(),
            tau.0,
            tau.1,
            cfg.digits,
            if ok { "PASS" } else { "FAIL" }
        ),
        Format::Json => pretty(&json!({
            "suite": suite.name(),
            "tau": [tau.0, tau.1],
            "digits": cfg.digits,
            "residual": residual,
            "pass": ok,
        })),
    };
    Ok(Output { text, ok })
}

pub fn render_checks(checks: &[Check], fmt: Format) -> Output {
    let ok = checks.iter().all(|c| c.pass);
    let text = match fmt {
        Format::Text => {
            let mut lines: Vec<String> = checks.iter().map(Check::line).collect();
            lines.push(format!(
                "{} of {} checks passed",
                checks.iter().filter(|c| c.pass).count(),
                checks.len()
            ));
            lines.join("\n")
        }
        Format::Json => pretty(&json!({"pass": ok, "checks": checks})),
    };
    Output { text, ok }
}

pub fn verify_all(cfg: &Config, fmt: Format) -> Output {
    render_checks(&suites::run_all(cfg), fmt)
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_codes() {
        let f: Failure = TError::SizeBound("x".into()).into();
        assert_eq!(f.code, exit::SIZE_BOUND);
        let f: Failure = LatticeError::T(TError::ParityError(1)).into();
        assert_eq!(f.code, exit::BAD_FLAGS);
        let f: Failure = PError::DegenerateState("x".into()).into();
        assert_eq!(f.code, exit::CONTRACT);
        let f: Failure = ModError::P(PError::Lattice(LatticeError::Io("x".into()))).into();
        assert_eq!(f.code, exit::IO);
    }

    #[test]
    fn failed_check_fails_the_run() {
        let checks = vec![
            Check { id: 1, name: "a", pass: true, detail: String::new(), seconds: 0.0 },
            Check { id: 2, name: "b", pass: false, detail: "x".into(), seconds: 0.0 },
        ];
        let out = render_checks(&checks, Format::Text);
        assert!(!out.ok);
        assert!(out.text.ends_with("1 of 2 checks passed"));
        let json: Value = serde_json::from_str(&render_checks(&checks, Format::Json).text).unwrap();
        assert_eq!(json["pass"], false);
        assert_eq!(json["checks"][1]["id"], 2);
    }

    #[test]
    fn y_sequence() {
        assert_eq!(compute_y(2, Format::Text).unwrap().text, "6");
    }
}
