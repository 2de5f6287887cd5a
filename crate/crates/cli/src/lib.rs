//! Command-line front end for `leflab-core`.
//!
//! [`run`] parses arguments, dispatches to the library and renders either
//! text or a single-line JSON record `{command, inputs, result, certificates, seed}`.

pub mod args;
mod fixtures;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;

use clap::Parser;
use serde_json::{json, Value};

use leflab_core::betti::{
    betti_ek, betti_koszul, betti_kwlp_closed_form, betti_mfull, betti_upper_bound, BettiTable,
};
use leflab_core::construct::{
    almost_revlex_from_hilbert, borel_tower_from_hilbert, enumerate_borel_fixed_with,
    lex_ideal_from_hilbert, phi_inverse, EnumerationFilter, EnumerationLimits,
};
use leflab_core::groebner::{
    buchberger, generic_lefschetz, quotient_hilbert, random_gin, symmetric_fixture, LefschetzMode,
    MonteCarlo, Polynomial, PrimeField, SymmetricKind,
};
use leflab_core::lefschetz::{chain_decomposition, k_lefschetz_last_vars, lefschetz_conditions};
use leflab_core::parse::{parse_ideal, parse_monomial_ideal, parse_polynomials, ParsedIdeal};
use leflab_core::{Error, Monomial, MonomialIdeal, OSequence, TermOrder};

use args::*;

/// Failure of a single invocation.
#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Io(String),
}

impl CliError {
    pub fn class(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.class(),
            CliError::Io(_) => "io",
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(m) => f.write_str(m),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Output of one command before rendering.
#[derive(Debug)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub certificates: Value,
    pub seed: Option<u64>,
    pub text: String,
}

impl Report {
    fn new(command: &str, inputs: Value, result: Value, text: String) -> Self {
        Report {
            command: command.into(),
            inputs,
            result,
            certificates: json!({}),
            seed: None,
            text,
        }
    }

    fn certified(mut self, certificates: Value) -> Self {
        self.certificates = certificates;
        self
    }

    fn seeded(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn to_json(&self) -> String {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
            "certificates": self.certificates,
            "seed": self.seed,
        })
        .to_string()
    }
}

/// Exit status and captured output streams of an invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            let (stdout, stderr) = if e.use_stderr() {
                (String::new(), rendered)
            } else {
                (rendered, String::new())
            };
            return Outcome {
                status: e.exit_code(),
                stdout,
                stderr,
            };
        }
    };
    let outcome = if cli.threads > 0 {
        match rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build() {
            Ok(pool) => pool.install(|| execute(&cli)),
            Err(e) => Err(CliError::Io(format!("cannot start thread pool: {e}"))),
        }
    } else {
        execute(&cli)
    };
    match outcome {
        Ok(report) => Outcome {
            status: 0,
            stdout: match cli.format {
                Format::Text => with_newline(report.text),
                Format::Json => with_newline(report.to_json()),
            },
            stderr: String::new(),
        },
        Err(e) => {
            let stderr = format!("error[{}]: {e}\n", e.class());
            let stdout = match cli.format {
                Format::Text => String::new(),
                Format::Json => with_newline(
                    json!({
                        "command": command_name(&cli.command),
                        "error": {"class": e.class(), "message": e.to_string()},
                    })
                    .to_string(),
                ),
            };
            Outcome {
                status: 1,
                stdout,
                stderr,
            }
        }
    }
}

fn with_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn command_name(command: &Command) -> &'static str {
    match command {
        Command::Hilbert(_) => "hilbert",
        Command::Chains(_) => "chains",
        Command::Classify(_) => "classify",
        Command::Check(_) => "check",
        Command::Construct(ConstructCommand::AlmostRevlex(_)) => "construct almost-revlex",
        Command::Construct(ConstructCommand::Lex(_)) => "construct lex",
        Command::Construct(ConstructCommand::Tower(_)) => "construct tower",
        Command::Construct(ConstructCommand::Lift(_)) => "construct lift",
        Command::Enumerate(_) => "enumerate",
        Command::Betti(BettiCommand::Ek(_)) => "betti ek",
        Command::Betti(BettiCommand::Mfull(_)) => "betti mfull",
        Command::Betti(BettiCommand::Koszul(_)) => "betti koszul",
        Command::Betti(BettiCommand::Bound(_)) => "betti bound",
        Command::Betti(BettiCommand::ClosedForm(_)) => "betti closed-form",
        Command::Gin(_) => "gin",
        Command::LefschetzGeneric(_) => "lefschetz-generic",
        Command::Fixture(_) => "fixture",
    }
}

/// Dispatches a parsed command line.
pub fn execute(cli: &Cli) -> CliResult<Report> {
    let field = PrimeField::new(cli.prime)?;
    let name = command_name(&cli.command);
    match &cli.command {
        Command::Hilbert(a) => hilbert(name, a, field),
        Command::Chains(input) => chains(name, input, field),
        Command::Classify(input) => classify(name, input, field),
        Command::Check(a) => check(name, a, field),
        Command::Construct(c) => construct(name, c, field),
        Command::Enumerate(a) => enumerate(name, a),
        Command::Betti(b) => betti(name, b, field),
        Command::Gin(a) => gin(name, a, field, cli.seed),
        Command::LefschetzGeneric(a) => lefschetz_generic(name, a, field, cli.seed),
        Command::Fixture(a) => fixture(name, a, field),
    }
}

// ---- input handling ----

enum Loaded {
    Monomial(MonomialIdeal),
    Polynomials(Vec<Polynomial>),
}

struct Source<'a> {
    ideal: Option<&'a str>,
    file: Option<&'a std::path::Path>,
    poly: Option<&'a str>,
}

fn load_source(
    nvars: usize,
    source: Source<'_>,
    cap: Option<u32>,
    field: PrimeField,
) -> CliResult<(Loaded, Value)> {
    let mut inputs = json!({ "vars": nvars });
    let loaded = match (source.ideal, source.file, source.poly) {
        (Some(text), None, None) => {
            inputs["ideal"] = json!(text);
            route(parse_ideal(text, nvars, field)?)
        }
        (None, Some(path), None) => {
            inputs["file"] = json!(path.display().to_string());
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
            route(parse_ideal(&text, nvars, field)?)
        }
        (None, None, Some(text)) => {
            inputs["poly"] = json!(text);
            Loaded::Polynomials(parse_polynomials(text, nvars, field)?)
        }
        _ => {
            return Err(Error::Argument(
                "give exactly one of --ideal, --file or --poly".into(),
            )
            .into())
        }
    };
    let loaded = match cap {
        None => loaded,
        Some(d) => {
            inputs["artinian_cap"] = json!(d);
            let power = MonomialIdeal::maximal_power(nvars, d)?;
            match loaded {
                Loaded::Monomial(i) => Loaded::Monomial(i.sum(&power)?),
                Loaded::Polynomials(mut gens) => {
                    gens.extend(as_polynomials(&power, field));
                    Loaded::Polynomials(gens)
                }
            }
        }
    };
    Ok((loaded, inputs))
}

fn route(parsed: ParsedIdeal) -> Loaded {
    match parsed {
        ParsedIdeal::Monomial(i) => Loaded::Monomial(i),
        ParsedIdeal::Polynomials(p) => Loaded::Polynomials(p),
    }
}

fn load(input: &IdealInput, field: PrimeField) -> CliResult<(Loaded, Value)> {
    let s = &input.source;
    load_source(
        input.nvars,
        Source {
            ideal: s.ideal.as_deref(),
            file: s.file.as_deref(),
            poly: s.poly.as_deref(),
        },
        input.artinian_cap,
        field,
    )
}

fn load_monomial(input: &IdealInput, field: PrimeField) -> CliResult<(MonomialIdeal, Value)> {
    match load(input, field)? {
        (Loaded::Monomial(i), inputs) => Ok((i, inputs)),
        (Loaded::Polynomials(_), _) => Err(Error::Argument(
            "this command needs a monomial ideal (generators with coefficient 1)".into(),
        )
        .into()),
    }
}

fn load_polynomials(input: &IdealInput, field: PrimeField) -> CliResult<(Vec<Polynomial>, Value)> {
    Ok(match load(input, field)? {
        (Loaded::Monomial(i), inputs) => (as_polynomials(&i, field), inputs),
        (Loaded::Polynomials(p), inputs) => (p, inputs),
    })
}

fn as_polynomials(i: &MonomialIdeal, field: PrimeField) -> Vec<Polynomial> {
    i.generators()
        .iter()
        .map(|&m| Polynomial::monomial(m, field, TermOrder::Grevlex))
        .collect()
}

fn sequence(text: &str) -> CliResult<OSequence> {
    Ok(text.parse::<OSequence>()?)
}

fn mode_of(m: Mode) -> LefschetzMode {
    match m {
        Mode::Strong => LefschetzMode::Strong,
        Mode::Weak => LefschetzMode::Weak,
    }
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "fail"
    }
}

fn ideal_value(i: &MonomialIdeal) -> Value {
    json!({ "nvars": i.nvars(), "generators": i.generators() })
}

// ---- commands ----

fn hilbert(name: &str, a: &HilbertArgs, field: PrimeField) -> CliResult<Report> {
    if let Some(text) = &a.h {
        return hilbert_sequence(name, text, a.nvars);
    }
    let (loaded, inputs) = load_source(
        a.nvars,
        Source {
            ideal: a.ideal.as_deref(),
            file: a.file.as_deref(),
            poly: a.poly.as_deref(),
        },
        a.artinian_cap,
        field,
    )?;
    let (h, method) = match &loaded {
        Loaded::Monomial(i) => (i.hilbert_function()?, "standard-monomials"),
        Loaded::Polynomials(p) => (quotient_hilbert(p)?, "groebner-basis"),
    };
    let result = json!({
        "h": h.values(),
        "socle_degree": h.socle_degree(),
        "length": h.sum(),
    });
    let text = format!(
        "h = ({h})\nsocle degree: {}\nlength: {}",
        h.socle_degree(),
        h.sum()
    );
    let mut certificates = json!({ "method": method });
    if matches!(loaded, Loaded::Polynomials(_)) {
        certificates["prime"] = json!(field.modulus());
    }
    Ok(Report::new(name, inputs, result, text).certified(certificates))
}

fn hilbert_sequence(name: &str, text: &str, n: usize) -> CliResult<Report> {
    let h = sequence(text)?;
    let mut out = String::new();
    let differences: Vec<Vec<u64>> = (0..=n).map(|t| h.delta(t).values().to_vec()).collect();
    let mut admissible = serde_json::Map::new();
    let mut obstructions = serde_json::Map::new();
    writeln!(out, "h = ({h})").unwrap();
    writeln!(out, "O-sequence: {}", h.is_o_sequence()).unwrap();
    writeln!(out, "unimodal: {}", h.is_unimodal()).unwrap();
    writeln!(out, "quasi-symmetric: {}", h.is_quasi_symmetric()).unwrap();
    for (t, d) in differences.iter().enumerate() {
        let d = OSequence::from_values(d.clone());
        writeln!(out, "Δ^{t}h = ({d})").unwrap();
    }
    for k in 1..=n {
        let obstruction = h.lefschetz_obstruction(n, k)?;
        match &obstruction {
            None => writeln!(out, "{k}-SLP in {n} variables: admissible").unwrap(),
            Some(why) => writeln!(out, "{k}-SLP in {n} variables: no, {why}").unwrap(),
        }
        admissible.insert(k.to_string(), json!(obstruction.is_none()));
        obstructions.insert(k.to_string(), json!(obstruction));
    }
    let unimodal = h.is_unimodal();
    let result = json!({
        "h": h.values(),
        "o_sequence": h.is_o_sequence(),
        "unimodal": unimodal,
        "quasi_symmetric": h.is_quasi_symmetric(),
        "peak": unimodal.then(|| h.peak()),
        "differences": differences,
        "admits_k_lefschetz": admissible,
        "obstructions": obstructions,
    });
    Ok(Report::new(name, json!({ "h": text, "vars": n }), result, out))
}

fn chains(name: &str, input: &IdealInput, field: PrimeField) -> CliResult<Report> {
    let (i, inputs) = load_monomial(input, field)?;
    let d = chain_decomposition(&i)?;
    let v = lefschetz_conditions(&i)?;
    let h = i.hilbert_function()?;
    let text = format!(
        "{d}\n\nh = ({h})\nSL: {}\nWL: {}",
        verdict(v.sl),
        verdict(v.wl)
    );
    let rows: Vec<Vec<String>> = d
        .rows()
        .iter()
        .map(|c| c.members().iter().map(Monomial::to_string).collect())
        .collect();
    let result = json!({
        "ideal": ideal_value(&i),
        "h": h.values(),
        "chains": d.chains,
        "rows": rows,
        "intervals": d.intervals(),
        "sl": v.sl,
        "wl": v.wl,
    });
    Ok(Report::new(name, inputs, result, text))
}

fn classify(name: &str, input: &IdealInput, field: PrimeField) -> CliResult<Report> {
    let (i, inputs) = load_monomial(input, field)?;
    let r = i.classify_stability();
    let mut text = format!("ideal: {i}\n");
    for (label, value) in [
        ("stable", r.stable),
        ("strongly stable", r.strongly_stable),
        ("Borel-fixed", r.borel_fixed),
        ("revlex", r.revlex),
        ("almost revlex", r.almost_revlex),
    ] {
        writeln!(text, "{label}: {value}").unwrap();
    }
    let mut result = to_value(&r);
    result["ideal"] = ideal_value(&i);
    result["artinian"] = json!(i.is_artinian());
    writeln!(text, "Artinian: {}", i.is_artinian()).unwrap();
    Ok(Report::new(name, inputs, result, text))
}

fn check(name: &str, a: &CheckArgs, field: PrimeField) -> CliResult<Report> {
    let (loaded, mut inputs) = load(&a.input, field)?;
    inputs["k"] = json!(a.k);
    inputs["mode"] = json!(mode_of(a.mode));
    let mode = mode_of(a.mode);
    let label = match a.mode {
        Mode::Strong => "SLP",
        Mode::Weak => "WLP",
    };
    let n = a.input.nvars;
    let forms: Vec<String> = (0..a.k.min(n)).map(|t| format!("x{}", n - t)).collect();
    match loaded {
        Loaded::Monomial(i) => {
            let pass = k_lefschetz_last_vars(&i, a.k, mode)?;
            let text = format!(
                "{}-{label} certificate with {}: {}",
                a.k,
                forms.join(", "),
                verdict(pass)
            );
            Ok(Report::new(name, inputs, json!({ "pass": pass }), text).certified(json!({
                "method": "last-variables",
                "forms": forms,
                "exact_for_strongly_stable": i.is_strongly_stable(),
            })))
        }
        Loaded::Polynomials(p) => {
            let gb = buchberger(&p)?;
            let initial = gb.initial_ideal()?;
            let pass = k_lefschetz_last_vars(&initial, a.k, mode)?;
            let text = format!(
                "initial ideal: {initial}\n{}-{label} certificate of the initial ideal with {}: {}{}",
                a.k,
                forms.join(", "),
                verdict(pass),
                if pass { "" } else { " (inconclusive for the ideal)" }
            );
            let result = json!({ "pass": pass, "conclusive": pass, "initial_ideal": ideal_value(&initial) });
            Ok(Report::new(name, inputs, result, text).certified(json!({
                "method": "initial-ideal",
                "forms": forms,
                "prime": field.modulus(),
            })))
        }
    }
}

fn construct(name: &str, c: &ConstructCommand, field: PrimeField) -> CliResult<Report> {
    let (ideal, inputs) = match c {
        ConstructCommand::AlmostRevlex(hi) => {
            let h = sequence(&hi.h)?;
            (almost_revlex_from_hilbert(&h, hi.nvars)?, json!({ "h": hi.h, "vars": hi.nvars }))
        }
        ConstructCommand::Lex(hi) => {
            let h = sequence(&hi.h)?;
            (lex_ideal_from_hilbert(&h, hi.nvars)?, json!({ "h": hi.h, "vars": hi.nvars }))
        }
        ConstructCommand::Tower(t) => {
            let hi = &t.hilbert;
            let h = sequence(&hi.h)?;
            (
                borel_tower_from_hilbert(&h, hi.nvars, t.k)?,
                json!({ "h": hi.h, "vars": hi.nvars, "k": t.k }),
            )
        }
        ConstructCommand::Lift(l) => {
            let (ibar, mut inputs) = load_monomial(&l.input, field)?;
            let h = sequence(&l.h)?;
            inputs["h"] = json!(l.h);
            (phi_inverse(&ibar, &h)?, inputs)
        }
    };
    let h = ideal.hilbert_function()?;
    let text = format!("{ideal}");
    let result = json!({ "ideal": ideal_value(&ideal), "h": h.values() });
    Ok(Report::new(name, inputs, result, text))
}

fn enumerate(name: &str, a: &EnumerateArgs) -> CliResult<Report> {
    let h = sequence(&a.hilbert.h)?;
    let n = a.hilbert.nvars;
    let filter = match a.filter {
        Filter::None => EnumerationFilter::None,
        Filter::Wl => EnumerationFilter::Wl,
        Filter::Sl => EnumerationFilter::Sl,
        Filter::Kslp => EnumerationFilter::KSlp(a.k),
        Filter::Kwlp => EnumerationFilter::KWlp(a.k),
    };
    let limits = EnumerationLimits {
        max_results: a.max_results,
        ..EnumerationLimits::default()
    };
    let found = enumerate_borel_fixed_with(&h, n, filter, &limits)?;
    let mut text = format!("{} strongly stable ideals\n", found.len());
    for i in &found {
        writeln!(text, "{i}").unwrap();
    }
    let result = json!({
        "count": found.len(),
        "ideals": found.iter().map(|i| i.generators()).collect::<Vec<_>>(),
    });
    let inputs = json!({ "h": a.hilbert.h, "vars": n, "filter": to_value(&filter) });
    Ok(Report::new(name, inputs, result, text))
}

fn betti(name: &str, b: &BettiCommand, field: PrimeField) -> CliResult<Report> {
    let (table, inputs, method): (BettiTable, Value, &str) = match b {
        BettiCommand::Ek(input) => {
            let (i, inputs) = load_monomial(input, field)?;
            (betti_ek(&i)?, inputs, "eliahou-kervaire")
        }
        BettiCommand::Mfull(input) => {
            let (i, inputs) = load_monomial(input, field)?;
            (betti_mfull(&i)?, inputs, "m-full-recursion")
        }
        BettiCommand::Koszul(input) => {
            let (i, inputs) = load_monomial(input, field)?;
            (betti_koszul(&i)?, inputs, "koszul-homology")
        }
        BettiCommand::Bound(a) => {
            let h = sequence(&a.hilbert.h)?;
            (
                betti_upper_bound(&h, a.hilbert.nvars, a.k)?,
                json!({ "h": a.hilbert.h, "vars": a.hilbert.nvars, "k": a.k }),
                "upper-bound",
            )
        }
        BettiCommand::ClosedForm(c) => {
            let a = &c.bound;
            let n = a.hilbert.nvars;
            let h = sequence(&a.hilbert.h)?;
            let mut inputs = json!({ "h": a.hilbert.h, "vars": n, "k": a.k });
            let base = if a.k < n && a.k > 0 {
                let base_ideal = match &c.base {
                    Some(text) => {
                        inputs["base"] = json!(text);
                        parse_monomial_ideal(text, n - a.k)?
                    }
                    None => lex_ideal_from_hilbert(&h.delta(a.k), n - a.k)?,
                };
                Some(betti_koszul(&base_ideal)?)
            } else {
                None
            };
            (
                betti_kwlp_closed_form(&h, n, a.k, base.as_ref())?,
                inputs,
                "closed-form",
            )
        }
    };
    let text = format!("{table}");
    Ok(Report::new(name, inputs, to_value(&table), text).certified(json!({ "method": method })))
}

fn gin(name: &str, a: &GinArgs, field: PrimeField, seed: u64) -> CliResult<Report> {
    let (gens, mut inputs) = load_polynomials(&a.input, field)?;
    inputs["samples"] = json!(a.samples);
    let mc = MonteCarlo {
        seed,
        samples: a.samples,
    };
    if let Some(q) = a.check_prime {
        inputs["check_prime"] = json!(q);
    }
    let report = random_gin(&gens, &mc)?;
    let mut text = String::new();
    match &report.candidate {
        Some(i) => writeln!(text, "gin: {i}").unwrap(),
        None => writeln!(text, "gin: samples disagree").unwrap(),
    }
    writeln!(text, "h = ({})", report.hilbert).unwrap();
    writeln!(text, "agreements: {}/{}", report.agreements, report.samples).unwrap();
    writeln!(text, "Hilbert function preserved: {}", report.hilbert_invariant).unwrap();
    write!(text, "prime: {}\nseed: {}", report.prime, report.seed).unwrap();
    let mut result = to_value(&report);
    if let Some(i) = &report.candidate {
        result["stability"] = to_value(&i.classify_stability());
    }
    let mut certificates = json!({
        "prime": report.prime,
        "samples": report.samples,
        "agreements": report.agreements,
    });
    if let Some(q) = a.check_prime {
        let other_field = PrimeField::new(q)?;
        let (other_gens, _) = load_polynomials(&a.input, other_field)?;
        let other = random_gin(&other_gens, &mc)?;
        let agree = other.candidate == report.candidate && other.hilbert == report.hilbert;
        certificates["check_prime"] = json!(q);
        certificates["primes_agree"] = json!(agree);
        if !agree {
            let warning = format!(
                "gin over {} differs from gin over {q}; the result may depend on the characteristic",
                report.prime
            );
            write!(text, "\nwarning: {warning}").unwrap();
            certificates["warning"] = json!(warning);
        }
    }
    Ok(Report::new(name, inputs, result, text)
        .certified(certificates)
        .seeded(seed))
}

fn lefschetz_generic(name: &str, a: &GenericArgs, field: PrimeField, seed: u64) -> CliResult<Report> {
    let (gens, mut inputs) = load_polynomials(&a.input, field)?;
    let mode = mode_of(a.mode);
    inputs["k"] = json!(a.k);
    inputs["mode"] = json!(mode);
    inputs["trials"] = json!(a.trials);
    let mc = MonteCarlo {
        seed,
        samples: a.trials,
    };
    let pass = generic_lefschetz(&gens, a.k, mode, &mc)?;
    let label = match a.mode {
        Mode::Strong => "SLP",
        Mode::Weak => "WLP",
    };
    let text = format!(
        "{}-{label} with random forms: {}\nprime: {}\ntrials: {}\nseed: {seed}",
        a.k,
        verdict(pass),
        field.modulus(),
        a.trials
    );
    let certificates = json!({
        "prime": field.modulus(),
        "trials": a.trials,
        "one_sided": "pass is a proof over the prime field; fail means no trial succeeded",
    });
    Ok(Report::new(name, inputs, json!({ "pass": pass }), text)
        .certified(certificates)
        .seeded(seed))
}

fn fixture(name: &str, a: &FixtureArgs, field: PrimeField) -> CliResult<Report> {
    let inputs = json!({
        "name": to_value_enum(a.name),
        "vars": a.nvars,
        "indices": a.indices,
        "power": a.power,
    });
    if let Some(f) = fixtures::monomial_fixture(a.name) {
        let mut ideal = parse_monomial_ideal(f.generators, f.nvars)?;
        if let Some(d) = f.cap {
            ideal = ideal.sum(&MonomialIdeal::maximal_power(f.nvars, d)?)?;
        }
        let result = ideal_value(&ideal);
        return Ok(Report::new(name, inputs, result, ideal.to_string()));
    }
    let n = a.nvars;
    let polys: Vec<Polynomial> = match a.name {
        FixtureName::Powers => (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = a.power;
                Monomial::new(&e).map(|m| Polynomial::monomial(m, field, TermOrder::Grevlex))
            })
            .collect::<leflab_core::Result<_>>()?,
        FixtureName::PowerSums | FixtureName::Elementary => {
            if a.indices.is_empty() {
                return Err(Error::Argument("--indices is required for this fixture".into()).into());
            }
            let kind = if a.name == FixtureName::PowerSums {
                SymmetricKind::PowerSum
            } else {
                SymmetricKind::Elementary
            };
            a.indices
                .iter()
                .map(|&i| symmetric_fixture(kind, i, a.power, n, field))
                .collect::<leflab_core::Result<_>>()?
        }
        _ => unreachable!("monomial fixtures handled above"),
    };
    let text = polys.iter().map(Polynomial::to_string).collect::<Vec<_>>().join("\n");
    let result = json!({ "nvars": n, "generators": polys });
    Ok(Report::new(name, inputs, result, text))
}

fn to_value_enum(name: FixtureName) -> Value {
    use clap::ValueEnum;
    json!(name.to_possible_value().map(|v| v.get_name().to_string()))
}
