//! Command-line front end: parses exact parameters, runs the full
//! verification pipeline, and renders text or JSON reports.

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::process::ExitCode;

use yoshihara_verifier::construction::{
    self, ConstructionError, ParameterSet, VerdictReport,
};
use yoshihara_verifier::exactfield::FieldDescriptor;
use yoshihara_verifier::picard;

const SCHEMA: &str = "yoshihara-verifier/1";

const EXIT_OK: u8 = 0;
const EXIT_CHECK_FAILURE: u8 = 2;
const EXIT_DEGENERATE: u8 = 3;
const EXIT_USAGE: u8 = 4;

#[derive(Parser)]
#[command(
    name = "yoshihara-verifier",
    about = "Exact verifier for a pair of plane quartic curves with isomorphic \
             non-isomorphic complements",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build both quartics and run every check and verdict
    Verify(ParamArgs),
    /// Print the divisor-class tables and contraction traces
    Classes(OutputArgs),
    /// Print the two octic binary forms and the equivalence evidence
    Forms(ParamArgs),
    /// Run the built-in golden instances
    Selftest(OutputArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value = "text")]
    output: OutputFormat,
    /// Print additional detail
    #[arg(long, short)]
    verbose: bool,
}

#[derive(Args)]
struct ParamArgs {
    /// Base field: "q" for the rationals, "gf(p)" or "gf(p^k)" for finite fields
    #[arg(long, default_value = "q")]
    field: String,
    /// First curve parameter (nonzero)
    #[arg(long, allow_hyphen_values = true)]
    alpha: String,
    /// Second curve parameter (nonzero, distinct from alpha)
    #[arg(long, allow_hyphen_values = true)]
    beta: String,
    /// Common parameter lambda (nonzero)
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    /// Common parameter mu
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    mu: String,
    #[command(flatten)]
    out: OutputArgs,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help and version requests are not usage errors
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let code = match cli.command {
        Command::Verify(args) => run_verify(&args),
        Command::Classes(args) => run_classes(&args),
        Command::Forms(args) => run_forms(&args),
        Command::Selftest(args) => run_selftest(&args),
    };
    ExitCode::from(code)
}

fn parse_params(args: &ParamArgs) -> Result<ParameterSet, u8> {
    let desc = FieldDescriptor::parse(&args.field).map_err(|e| {
        eprintln!("error: invalid field specifier {:?}: {e}", args.field);
        EXIT_USAGE
    })?;
    let mut values = Vec::with_capacity(4);
    for (name, text) in [
        ("alpha", &args.alpha),
        ("beta", &args.beta),
        ("lambda", &args.lambda),
        ("mu", &args.mu),
    ] {
        values.push(desc.parse_element(text).map_err(|e| {
            eprintln!("error: invalid value for --{name}: {e}");
            EXIT_USAGE
        })?);
    }
    let mu = values.pop().unwrap();
    let lambda = values.pop().unwrap();
    let beta = values.pop().unwrap();
    let alpha = values.pop().unwrap();
    ParameterSet::new(desc, alpha, beta, lambda, mu).map_err(|e| {
        eprintln!("error: {e}");
        EXIT_DEGENERATE
    })
}

fn error_exit_code(e: &ConstructionError) -> u8 {
    match e {
        ConstructionError::DegenerateParameters(_) => EXIT_DEGENERATE,
        _ => EXIT_CHECK_FAILURE,
    }
}

fn emit_json(value: serde_json::Value) {
    let mut top = serde_json::Map::new();
    top.insert("schema".into(), SCHEMA.into());
    if let serde_json::Value::Object(map) = value {
        for (k, v) in map {
            top.insert(k, v);
        }
    }
    println!(
        "{}",
        serde_json::to_string_pretty(&serde_json::Value::Object(top)).expect("serialize")
    );
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn run_verify(args: &ParamArgs) -> u8 {
    let params = match parse_params(args) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let report = match construction::full_report(&params) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return error_exit_code(&e);
        }
    };
    let ok = report.all_checks_passed();
    match args.out.output {
        OutputFormat::Json => {
            emit_json(serde_json::to_value(&report).expect("serialize"));
        }
        OutputFormat::Text => render_report_text(&report, args.out.verbose),
    }
    if ok {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILURE
    }
}

fn render_report_text(report: &VerdictReport, verbose: bool) {
    println!(
        "field {}; alpha = {}, beta = {}, lambda = {}, mu = {}",
        report.field, report.alpha, report.beta, report.lambda, report.mu
    );
    println!("Gamma_1: {}", report.gamma1);
    println!("Gamma_2: {}", report.gamma2);
    println!();
    for (i, section) in report.omega_membership.iter().enumerate() {
        println!("linear-system membership, Gamma_{}:", i + 1);
        for c in section {
            print_check(c, verbose);
        }
    }
    println!("configuration checks:");
    for c in &report.figure_checks {
        print_check(c, verbose);
    }
    println!("contraction checks:");
    for c in &report.contraction_checks {
        print_check(c, verbose);
    }
    println!(
        "image degrees: ({}, {})",
        report.degrees[0], report.degrees[1]
    );
    let audit = &report.intersection_audit;
    println!(
        "intersection audit [{}]: I_a = {}, I_b = {}, chain = {}, \
         residuals = ({}, {}), free = {}, total = {}",
        if audit.passed { "pass" } else { "FAIL" },
        audit.i_a,
        audit.i_b,
        audit.chain_total,
        audit.residual_a,
        audit.residual_b,
        audit.free,
        audit.bezout_total
    );
    if verbose {
        println!("F_1 coefficients: [{}]", report.f1.join(", "));
        println!("F_2 coefficients: [{}]", report.f2.join(", "));
    }
    println!();
    println!(
        "projectively equivalent: {}{}",
        report.projectively_equivalent,
        report
            .projective_witness
            .as_deref()
            .map(|w| format!("  witness {w}"))
            .unwrap_or_default()
    );
    println!(
        "isomorphic complements:  {}{}",
        report.isomorphic,
        match (&report.isomorphism_witness, &report.nonequivalence_certificate) {
            (Some(w), _) => format!("  witness {w}"),
            (None, Some(primes)) => format!("  certified modulo {primes:?}"),
            _ => String::new(),
        }
    );
    println!(
        "type I: ({}, {})",
        report.type_i[0], report.type_i[1]
    );
    println!("elapsed: {} ms", report.elapsed_ms);
}

fn print_check(c: &construction::CheckResult, verbose: bool) {
    if verbose {
        println!(
            "  [{}] {}: {}",
            if c.passed { "pass" } else { "FAIL" },
            c.name,
            c.details
        );
    } else {
        println!("  [{}] {}", if c.passed { "pass" } else { "FAIL" }, c.name);
    }
}

// ---------------------------------------------------------------------------
// classes
// ---------------------------------------------------------------------------

fn run_classes(args: &OutputArgs) -> u8 {
    let mut failed = false;
    let mut traces = serde_json::Map::new();

    let table = |classes: Vec<(&'static str, picard::DivisorClass)>| {
        classes
            .into_iter()
            .map(|(name, c)| {
                let coeffs: Vec<String> =
                    c.coeffs().iter().map(|v| v.to_string()).collect();
                let sq = picard::self_intersection(&c).to_string();
                (name, coeffs, sq)
            })
            .collect::<Vec<_>>()
    };
    let x_table = table(picard::configuration_classes());
    let xp_table = table(picard::xprime_configuration_classes());

    let mut contractions = Vec::new();
    for i in [1usize, 2] {
        match picard::contract_sequence(i) {
            Ok(steps) => {
                let degree = picard::image_degree(i).expect("degree");
                contractions.push((i, steps, degree));
            }
            Err(e) => {
                eprintln!("error: contraction {i} failed: {e}");
                failed = true;
            }
        }
    }

    match args.output {
        OutputFormat::Json => {
            let as_json = |t: &[(&str, Vec<String>, String)]| {
                serde_json::Value::Array(
                    t.iter()
                        .map(|(name, coeffs, sq)| {
                            serde_json::json!({
                                "name": name,
                                "coefficients": coeffs,
                                "self_intersection": sq,
                            })
                        })
                        .collect(),
                )
            };
            traces.insert("classes_x".into(), as_json(&x_table));
            traces.insert("classes_xprime".into(), as_json(&xp_table));
            let mut seqs = Vec::new();
            for (i, steps, degree) in &contractions {
                seqs.push(serde_json::json!({
                    "sequence": i,
                    "steps": steps.iter().map(|s| s.name).collect::<Vec<_>>(),
                    "image_degree": degree.to_string(),
                }));
            }
            traces.insert("contractions".into(), serde_json::Value::Array(seqs));
            emit_json(serde_json::Value::Object(traces));
        }
        OutputFormat::Text => {
            println!("classes on X (basis H, E_a, E_a1, E_b, E_b1, E_b2, E_b3, E_p_alpha, E_p_beta, E_q, E_r):");
            for (name, coeffs, sq) in &x_table {
                println!("  {name:<10} [{}]  self-intersection {sq}", coeffs.join(", "));
            }
            println!("classes on X':");
            for (name, coeffs, sq) in &xp_table {
                println!("  {name:<10} [{}]  self-intersection {sq}", coeffs.join(", "));
            }
            for (i, steps, degree) in &contractions {
                println!("contraction eta_{i} (each step a (-1)-class):");
                for s in steps {
                    println!("  stage {:>2}: {}", s.stage, s.name);
                }
                println!("  image degree: {degree}");
            }
        }
    }
    if failed {
        EXIT_CHECK_FAILURE
    } else {
        EXIT_OK
    }
}

// ---------------------------------------------------------------------------
// forms
// ---------------------------------------------------------------------------

fn run_forms(args: &ParamArgs) -> u8 {
    let params = match parse_params(args) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let result = (|| -> Result<_, ConstructionError> {
        let (g1, g2) = construction::build_gammas(&params)?;
        let ((_, f1), (_, f2)) = construction::build_forms(&params, &g1, &g2)?;
        let verdict = construction::decide_isomorphic(&f1, &f2)?;
        Ok((f1, f2, verdict))
    })();
    let (f1, f2, (iso, evidence)) = match result {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: {e}");
            return error_exit_code(&e);
        }
    };
    let coeffs = |f: &yoshihara_verifier::binaryforms::BinaryForm| {
        f.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>()
    };
    let evidence_text = match &evidence {
        construction::IsoEvidence::Witness { a, c, d } => {
            format!("witness (u:v) -> ({a}*u : {c}*u + {d}*v)")
        }
        construction::IsoEvidence::Certificate { primes } => {
            format!("non-equivalence certified modulo {primes:?}")
        }
        construction::IsoEvidence::ExhaustedSearch => "exhaustive search".into(),
    };
    match args.out.output {
        OutputFormat::Json => {
            emit_json(serde_json::json!({
                "f1": coeffs(&f1),
                "f2": coeffs(&f2),
                "equivalent_fixing_point": iso,
                "evidence": evidence_text,
            }));
        }
        OutputFormat::Text => {
            println!("coefficients are listed for u^i v^(8-i), i = 0..8");
            println!("F_1: [{}]", coeffs(&f1).join(", "));
            println!("F_2: [{}]", coeffs(&f2).join(", "));
            println!("equivalent fixing (0:1): {iso}  ({evidence_text})");
        }
    }
    EXIT_OK
}

// ---------------------------------------------------------------------------
// selftest
// ---------------------------------------------------------------------------

fn run_selftest(args: &OutputArgs) -> u8 {
    struct Instance {
        label: &'static str,
        field: &'static str,
        values: [&'static str; 4],
        expect_proj: bool,
        expect_iso: bool,
    }
    let instances = [
        Instance {
            label: "rationals, (1, 2, 1, 1)",
            field: "q",
            values: ["1", "2", "1", "1"],
            expect_proj: false,
            expect_iso: false,
        },
        Instance {
            label: "rationals, (1, -1, 1, 0)",
            field: "q",
            values: ["1", "-1", "1", "0"],
            expect_proj: true,
            expect_iso: true,
        },
        Instance {
            label: "GF(5), (1, 2, 1, 1)",
            field: "gf(5)",
            values: ["1", "2", "1", "1"],
            expect_proj: false,
            expect_iso: false,
        },
        Instance {
            label: "GF(4), (1, g, 1, 1)",
            field: "gf(2^2)",
            values: ["1", "g", "1", "1"],
            expect_proj: false,
            expect_iso: false,
        },
        Instance {
            label: "GF(4), (1, g+1, 1, 1)",
            field: "gf(2^2)",
            values: ["1", "g+1", "1", "1"],
            expect_proj: false,
            expect_iso: false,
        },
        Instance {
            label: "GF(4), (g, g+1, 1, 1)",
            field: "gf(2^2)",
            values: ["g", "g+1", "1", "1"],
            expect_proj: false,
            expect_iso: false,
        },
    ];
    let mut all_ok = true;
    let mut lines = Vec::new();
    for inst in &instances {
        let outcome = (|| -> Result<VerdictReport, String> {
            let desc = FieldDescriptor::parse(inst.field).map_err(|e| e.to_string())?;
            let vals: Result<Vec<_>, _> = inst
                .values
                .iter()
                .map(|v| desc.parse_element(v))
                .collect();
            let mut vals = vals.map_err(|e| e.to_string())?;
            let mu = vals.pop().unwrap();
            let lambda = vals.pop().unwrap();
            let beta = vals.pop().unwrap();
            let alpha = vals.pop().unwrap();
            let params = ParameterSet::new(desc, alpha, beta, lambda, mu)
                .map_err(|e| e.to_string())?;
            construction::full_report(&params).map_err(|e| e.to_string())
        })();
        let (ok, detail) = match outcome {
            Ok(report) => {
                let ok = report.all_checks_passed()
                    && report.projectively_equivalent == inst.expect_proj
                    && report.isomorphic == inst.expect_iso
                    && report.degrees == [39, 39]
                    && report.type_i == [false, false];
                (
                    ok,
                    format!(
                        "proj-equiv {}, isomorphic {}, degrees ({}, {})",
                        report.projectively_equivalent,
                        report.isomorphic,
                        report.degrees[0],
                        report.degrees[1]
                    ),
                )
            }
            Err(e) => (false, e),
        };
        all_ok &= ok;
        lines.push((inst.label, ok, detail));
    }
    match args.output {
        OutputFormat::Json => {
            emit_json(serde_json::json!({
                "instances": lines
                    .iter()
                    .map(|(label, ok, detail)| serde_json::json!({
                        "label": label,
                        "passed": ok,
                        "detail": detail,
                    }))
                    .collect::<Vec<_>>(),
                "passed": all_ok,
            }));
        }
        OutputFormat::Text => {
            for (label, ok, detail) in &lines {
                if args.verbose {
                    println!("[{}] {label}: {detail}", if *ok { "pass" } else { "FAIL" });
                } else {
                    println!("[{}] {label}", if *ok { "pass" } else { "FAIL" });
                }
            }
        }
    }
    if all_ok {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILURE
    }
}
