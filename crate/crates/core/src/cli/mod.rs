//! The `cl2` command line.
//!
//! Text output is one `label: value` line per field in a fixed order
//! (matrices follow their label on separate lines). `--json` prints one JSON
//! object with the same fields in the same order. Rational values are
//! `"p/q"` strings; witnesses, canonical forms, `H(u)` and exact F
//! eigenvalues live in ℚ(√r) and are written as `{p, q, radicand}` triples
//! (`p + q·√radicand`) per coefficient.
//! `--float` adds `(approx)` companions with 12 significant digits.
//!
//! Exit status: 0 on success, 1 on a domain error (`ZeroDivisor`,
//! `NotSimilar`, `NotPseudosimilar`), 2 on a malformed literal or usage error.

pub mod literal;
pub mod render;

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};

use crate::element::Cl2Element;
use crate::equivalence::{
    canonical, is_pseudosimilar, is_similar, pseudosimilarity_witness, similarity_witness, Witness,
};
use crate::error::Error;
use crate::mp::{mp, mp_case, verify_penrose};
use crate::rep::{left_matrix, phi_matrix, right_matrix};
use crate::scalar::fmt_rational;
use crate::solvers::{
    solve_axb, solve_consylvester, solve_sylvester, sylvester_closed_form_applies, SolutionSet,
};
use crate::spectrum::{f_eigen, f_rank, w_det, w_eigen, w_rank_report};

pub use literal::{parse_element, ParseError};
use render::{
    element_json, float_json, float_vector, fmt_complex, matrix_json, rational_json, scalar_json,
    value_json, witness_json,
};

#[derive(Parser, Debug)]
#[command(name = "cl2", version, about = "Exact computations in the Clifford algebra Cl2")]
struct Cli {
    /// Machine-readable JSON output
    #[arg(long, global = true)]
    json: bool,
    /// Append decimal approximations (12 significant digits)
    #[arg(long, global = true)]
    float: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Moore-Penrose inverse a⁺
    Mpinv {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Two-sided inverse a⁻¹
    Inv {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// All x with a x b = d
    SolveAxb {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        d: String,
    },
    /// All x with a x = d
    SolveAx {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        d: String,
    },
    /// All x with x b = d
    SolveXb {
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        d: String,
    },
    /// All x with a x = x b
    Sylvester {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// All x with a x = conj(x) b
    Consylvester {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Decide similarity and give a witness u with a u = u b
    Similar {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Decide pseudosimilarity and give a witness u with a u = conj(u) b
    Pseudosimilar {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Canonical form under similarity with its witness
    Canonical {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// L(a), R(a), phi(a) and their determinants
    Matrep {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
}

/// Exit status and captured streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Parse { name: &'static str, source: String, err: ParseError },
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

/// Ordered fields rendered either as text lines or as one JSON object.
struct Doc {
    float: bool,
    text: String,
    json: Map<String, Value>,
}

impl Doc {
    fn new(float: bool) -> Self {
        Doc {
            float,
            text: String::new(),
            json: Map::new(),
        }
    }

    fn field(&mut self, label: &str, key: &str, text: impl std::fmt::Display, value: Value) {
        let _ = writeln!(self.text, "{label}: {text}");
        self.json.insert(key.to_string(), value);
    }

    fn block(&mut self, label: &str, key: &str, text: impl std::fmt::Display, value: Value) {
        let _ = write!(self.text, "{label}:\n{text}");
        self.json.insert(key.to_string(), value);
    }

    fn element(&mut self, label: &str, key: &str, a: &Cl2Element) {
        self.field(label, key, a, element_json(a));
        if self.float {
            self.field(&format!("{label} (approx)"), &format!("{key}_approx"), float_vector(a), float_json(a));
        }
    }

    fn witness(&mut self, w: &Witness) {
        self.field("witness", "witness", &w.u, witness_json(&w.u));
        if self.float {
            self.field("witness (approx)", "witness_approx", float_vector(&w.u), float_json(&w.u));
        }
        self.field("H(u)", "h_u", &w.h_u, scalar_json(&w.h_u));
    }

    fn basis(&mut self, set: &SolutionSet) {
        self.field("dimension", "dimension", set.dimension(), json!(set.dimension()));
        for (i, h) in set.homogeneous_basis.iter().enumerate() {
            let _ = writeln!(self.text, "basis[{i}]: {h}");
        }
        self.json.insert(
            "basis".into(),
            Value::Array(set.homogeneous_basis.iter().map(element_json).collect()),
        );
    }
}

fn parse_arg(name: &'static str, source: &str) -> Result<Cl2Element, Failure> {
    parse_element(source).map_err(|err| Failure::Parse {
        name,
        source: source.to_string(),
        err,
    })
}

/// Runs one command line (including the program name) and captures its output.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    let mut doc = Doc::new(cli.float);
    let result = dispatch(&cli.command, &mut doc);
    let stdout = if doc.json.is_empty() {
        String::new()
    } else if cli.json {
        let mut s = serde_json::to_string_pretty(&Value::Object(doc.json)).expect("serializable");
        s.push('\n');
        s
    } else {
        doc.text
    };
    match result {
        Ok(()) => Outcome { code: 0, stdout, stderr: String::new() },
        Err(Failure::Domain(e)) => Outcome {
            code: 1,
            stdout,
            stderr: format!("error: {e}\n"),
        },
        Err(Failure::Parse { name, source, err }) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: ParseError: argument <{name}> {source:?}: {err}\n"),
        },
    }
}

fn dispatch(command: &Command, doc: &mut Doc) -> Result<(), Failure> {
    match command {
        Command::Mpinv { a } => cmd_mpinv(doc, &parse_arg("a", a)?),
        Command::Inv { a } => cmd_inv(doc, &parse_arg("a", a)?),
        Command::SolveAxb { a, b, d } => {
            let (a, b, d) = (parse_arg("a", a)?, parse_arg("b", b)?, parse_arg("d", d)?);
            cmd_solve(doc, "a x b = d", &[("a", &a), ("b", &b), ("d", &d)], solve_axb(&a, &b, &d)?)
        }
        Command::SolveAx { a, d } => {
            let (a, d) = (parse_arg("a", a)?, parse_arg("d", d)?);
            let set = solve_axb(&a, &Cl2Element::one(), &d)?;
            cmd_solve(doc, "a x = d", &[("a", &a), ("d", &d)], set)
        }
        Command::SolveXb { b, d } => {
            let (b, d) = (parse_arg("b", b)?, parse_arg("d", d)?);
            let set = solve_axb(&Cl2Element::one(), &b, &d)?;
            cmd_solve(doc, "x b = d", &[("b", &b), ("d", &d)], set)
        }
        Command::Sylvester { a, b } => cmd_sylvester(doc, &parse_arg("a", a)?, &parse_arg("b", b)?),
        Command::Consylvester { a, b } => {
            cmd_consylvester(doc, &parse_arg("a", a)?, &parse_arg("b", b)?)
        }
        Command::Similar { a, b } => cmd_similar(doc, &parse_arg("a", a)?, &parse_arg("b", b)?),
        Command::Pseudosimilar { a, b } => {
            cmd_pseudosimilar(doc, &parse_arg("a", a)?, &parse_arg("b", b)?)
        }
        Command::Canonical { a } => cmd_canonical(doc, &parse_arg("a", a)?),
        Command::Matrep { a } => cmd_matrep(doc, &parse_arg("a", a)?),
    }
}

fn cmd_mpinv(doc: &mut Doc, a: &Cl2Element) -> Result<(), Failure> {
    let x = mp(a);
    let h = a.h();
    doc.element("a", "a", a);
    doc.field("H(a)", "h_a", &h, value_json(&h));
    let case = mp_case(a).name();
    doc.field("case", "case", case, json!(case));
    doc.element("mp", "mp", &x);
    let ok = verify_penrose(a, &x);
    doc.field("penrose", "penrose", ok, json!(ok));
    Ok(())
}

fn cmd_inv(doc: &mut Doc, a: &Cl2Element) -> Result<(), Failure> {
    doc.element("a", "a", a);
    let h = a.h();
    doc.field("H(a)", "h_a", &h, value_json(&h));
    let inv = a.inverse()?;
    doc.element("inverse", "inverse", &inv);
    Ok(())
}

fn cmd_solve(
    doc: &mut Doc,
    equation: &str,
    inputs: &[(&str, &Cl2Element)],
    set: SolutionSet,
) -> Result<(), Failure> {
    doc.field("equation", "equation", equation, json!(equation));
    for (name, e) in inputs {
        doc.element(name, name, e);
    }
    doc.field("solvable", "solvable", set.solvable, json!(set.solvable));
    match &set.particular {
        Some(p) => doc.element("particular", "particular", p),
        None => doc.field("particular", "particular", "none", Value::Null),
    }
    doc.basis(&set);
    Ok(())
}

fn cmd_sylvester(doc: &mut Doc, a: &Cl2Element, b: &Cl2Element) -> Result<(), Failure> {
    let set = solve_sylvester(a, b)?;
    let eigs = f_eigen(a, b)?;
    let rank = f_rank(a, b)?;
    doc.field("equation", "equation", "a x = x b", json!("a x = x b"));
    doc.element("a", "a", a);
    doc.element("b", "b", b);
    doc.field("rank F", "rank_f", rank, json!(rank));
    let text: Vec<String> = eigs.iter().map(ToString::to_string).collect();
    let values: Vec<Value> = eigs
        .iter()
        .map(|e| {
            json!({
                "shift": rational_json(&e.shift),
                "g_a": rational_json(&e.g_a),
                "g_b": rational_json(&e.g_b),
                "outer": e.outer,
                "inner": e.inner,
                "exact": e.exact().as_ref().map_or(Value::Null, scalar_json),
            })
        })
        .collect();
    doc.field("eigenvalues F", "eigenvalues_f", text.join(", "), Value::Array(values));
    if doc.float {
        let approx: Vec<String> = eigs.iter().map(|e| fmt_complex(e.approx())).collect();
        doc.field(
            "eigenvalues F (approx)",
            "eigenvalues_f_approx",
            approx.join(", "),
            json!(approx),
        );
    }
    let method = if sylvester_closed_form_applies(a, b) { "closed-form" } else { "elimination" };
    doc.field("method", "method", method, json!(method));
    doc.basis(&set);
    Ok(())
}

fn cmd_consylvester(doc: &mut Doc, a: &Cl2Element, b: &Cl2Element) -> Result<(), Failure> {
    let set = solve_consylvester(a, b)?;
    let report = w_rank_report(a, b)?;
    let det = w_det(a, b)?;
    let eigs = w_eigen(a, b)?;
    doc.field("equation", "equation", "a x = conj(x) b", json!("a x = conj(x) b"));
    doc.element("a", "a", a);
    doc.element("b", "b", b);
    doc.field("det W", "det_w", fmt_rational(&det), rational_json(&det));
    doc.field("rank W", "rank_w", report.rank, json!(report.rank));
    doc.field("rank case", "rank_case", report.case.name(), json!(report.case.name()));
    doc.field("rank consistent", "rank_consistent", report.consistent(), json!(report.consistent()));
    let text: Vec<String> = eigs.iter().map(ToString::to_string).collect();
    let values: Vec<Value> = eigs
        .iter()
        .map(|e| {
            json!({
                "center": rational_json(&e.center),
                "radicand": rational_json(&e.radicand),
                "multiplicity": e.multiplicity,
            })
        })
        .collect();
    doc.field("eigenvalues W", "eigenvalues_w", text.join("; "), Value::Array(values));
    if doc.float {
        let approx: Vec<String> = eigs
            .iter()
            .flat_map(|e| e.approx())
            .map(fmt_complex)
            .collect();
        doc.field(
            "eigenvalues W (approx)",
            "eigenvalues_w_approx",
            approx.join(", "),
            json!(approx),
        );
    }
    doc.basis(&set);
    Ok(())
}

fn invariants(doc: &mut Doc, name: &str, a: &Cl2Element) {
    let (cre, g) = (a.cre(), a.g());
    doc.field(&format!("Cre({name})"), &format!("cre_{name}"), &cre, value_json(&cre));
    doc.field(&format!("G({name})"), &format!("g_{name}"), &g, value_json(&g));
}

fn cmd_similar(doc: &mut Doc, a: &Cl2Element, b: &Cl2Element) -> Result<(), Failure> {
    doc.element("a", "a", a);
    doc.element("b", "b", b);
    invariants(doc, "a", a);
    invariants(doc, "b", b);
    let verdict = is_similar(a, b);
    doc.field("similar", "similar", verdict, json!(verdict));
    let w = similarity_witness(a, b)?;
    doc.witness(&w);
    Ok(())
}

fn cmd_pseudosimilar(doc: &mut Doc, a: &Cl2Element, b: &Cl2Element) -> Result<(), Failure> {
    doc.element("a", "a", a);
    doc.element("b", "b", b);
    let s = a.conj() + b;
    let (ha, hb, hs) = (a.h(), b.h(), s.h());
    doc.field("H(a)", "h_a", &ha, value_json(&ha));
    doc.field("H(b)", "h_b", &hb, value_json(&hb));
    doc.element("conj(a) + b", "conj_a_plus_b", &s);
    doc.field("H(conj(a) + b)", "h_conj_a_plus_b", &hs, value_json(&hs));
    let verdict = is_pseudosimilar(a, b);
    doc.field("pseudosimilar", "pseudosimilar", verdict, json!(verdict));
    let w = pseudosimilarity_witness(a, b)?;
    doc.witness(&w);
    Ok(())
}

fn cmd_canonical(doc: &mut Doc, a: &Cl2Element) -> Result<(), Failure> {
    let (form, w) = canonical(a)?;
    doc.element("a", "a", a);
    doc.field("G(a)", "g_a", fmt_rational(&form.g), rational_json(&form.g));
    doc.field("kind", "kind", form.kind.name(), json!(form.kind.name()));
    let kappa = form.element();
    doc.field("canonical", "canonical", &kappa, witness_json(&kappa));
    if doc.float {
        doc.field("canonical (approx)", "canonical_approx", float_vector(&kappa), float_json(&kappa));
    }
    doc.witness(&w);
    Ok(())
}

fn cmd_matrep(doc: &mut Doc, a: &Cl2Element) -> Result<(), Failure> {
    let (l, r, phi) = (left_matrix(a)?, right_matrix(a)?, phi_matrix(a)?);
    doc.element("a", "a", a);
    let h = a.h();
    doc.field("H(a)", "h_a", &h, value_json(&h));
    doc.block("L(a)", "l", &l, matrix_json(&l));
    doc.block("R(a)", "r", &r, matrix_json(&r));
    doc.block("phi(a)", "phi", &phi, matrix_json(&phi));
    for (label, key, m) in [("det L(a)", "det_l", &l), ("det R(a)", "det_r", &r), ("det phi(a)", "det_phi", &phi)] {
        let d = m.det();
        doc.field(label, key, fmt_rational(&d), rational_json(&d));
    }
    Ok(())
}
