//! Fixed CLI corpus with golden transcripts under `tests/golden/`.
//!
//! Set `CL2_UPDATE_GOLDEN=1` to rewrite the transcripts.

use std::path::PathBuf;

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub code: i32,
}

const fn case(name: &'static str, args: &'static [&'static str], code: i32) -> Case {
    Case { name, args, code }
}

pub const CASES: &[Case] = &[
    case("inv_example", &["inv", "1-e1+2e3"], 0),
    case("inv_one", &["inv", "1"], 0),
    case("inv_zero_divisor", &["inv", "1+e1"], 1),
    case("mpinv_a_ex1", &["mpinv", "1+e2"], 0),
    case("mpinv_b_ex1", &["mpinv", "e1+e3"], 0),
    case("mpinv_ex2", &["mpinv", "1-e2"], 0),
    case("mpinv_ex4", &["mpinv", "e2+e3"], 0),
    case("mpinv_ex5", &["mpinv", "2+e1+2e2+e3"], 0),
    case("mpinv_zero", &["mpinv", "0"], 0),
    case("mpinv_json", &["--json", "mpinv", "1+e2"], 0),
    case("mpinv_float", &["mpinv", "--float", "1-e1+2e3"], 0),
    case("solve_axb_ex1", &["solve-axb", "1+e2", "e1+e3", "1+e2"], 0),
    case("solve_axb_json", &["--json", "solve-axb", "1+e2", "e1+e3", "1+e2"], 0),
    case("solve_ax_ex2", &["solve-ax", "1-e2", "1+e1-e2+e3"], 0),
    case("solve_ax_ex3", &["solve-ax", "1+e1+e2+e3", "0"], 0),
    case("solve_xb_ex4", &["solve-xb", "e2+e3", "1-e1"], 0),
    case("solve_xb_ex5", &["solve-xb", "2+e1+2e2+e3", "0"], 0),
    case("solve_ax_unsolvable", &["solve-ax", "1+e2", "1-e2"], 0),
    case("sylvester_g41", &["sylvester", "2+4e1+5e2", "2+3e1+6e2+2e3"], 0),
    case("sylvester_g41_float", &["--float", "sylvester", "2+4e1+5e2", "2+3e1+6e2+2e3"], 0),
    case("sylvester_rank3", &["sylvester", "1+3e1+4e2-5e3", "2+e1+e2+e3"], 0),
    case("consylvester_rank1", &["consylvester", "1+e1+e2+e3", "-1+e1+e2+e3"], 0),
    case("consylvester_h58", &["consylvester", "2+3e1+4e2+5e3", "5+3e1+4e2+2e3"], 0),
    case("consylvester_h58_float", &["--float", "consylvester", "2+3e1+4e2+5e3", "5+3e1+4e2+2e3"], 0),
    case("consylvester_zd", &["consylvester", "1+e1+e3", "e3"], 0),
    case("consylvester_mixed", &["consylvester", "1-e1+2e2-2e3", "6+7e1+3e2+2e3"], 0),
    case("consylvester_mixed_json", &["--json", "consylvester", "1-e1+2e2-2e3", "6+7e1+3e2+2e3"], 0),
    case("similar_g41", &["similar", "2+4e1+5e2", "2+3e1+6e2+2e3"], 0),
    case("similar_g41_json", &["--json", "--float", "similar", "2+4e1+5e2", "2+3e1+6e2+2e3"], 0),
    case("similar_neg_g", &["similar", "1-e3", "1+e3"], 0),
    case("similar_false", &["similar", "1+e1", "1+2e1"], 1),
    case("pseudosimilar_conj_sum_zero", &["pseudosimilar", "1+e1+e2+e3", "-1+e1+e2+e3"], 0),
    case("pseudosimilar_h58", &["pseudosimilar", "2+3e1+4e2+5e3", "5+3e1+4e2+2e3"], 0),
    case("pseudosimilar_zd_false", &["pseudosimilar", "1+e1+e3", "e3"], 1),
    case("pseudosimilar_mixed_false", &["pseudosimilar", "1-e1+2e2-2e3", "6+7e1+3e2+2e3"], 1),
    case("canonical_neg_g1", &["canonical", "1-e3"], 0),
    case("canonical_neg_g4", &["canonical", "1+2e1+e2+3e3"], 0),
    case("canonical_pos_g16", &["canonical", "1+5e1+3e3"], 0),
    case("canonical_pos_g4", &["canonical", "1+2e1+e2-e3"], 0),
    case("canonical_zero_g", &["canonical", "1+3e1+4e2+5e3"], 0),
    case("canonical_irrational", &["canonical", "2+4e1+5e2"], 0),
    case("canonical_irrational_json", &["--json", "canonical", "2+4e1+5e2"], 0),
    case("canonical_central", &["canonical", "3/2"], 0),
    case("matrep_example", &["matrep", "1-e1+2e3"], 0),
    case("matrep_json", &["--json", "matrep", "1+e2"], 0),
    case("bad_basis", &["inv", "1+e4"], 2),
    case("bad_empty", &["mpinv", ""], 2),
    case("bad_trailing_op", &["solve-ax", "1", "2+"], 2),
    case("bad_char", &["similar", "2x", "1"], 2),
    case("bad_zero_denominator", &["canonical", "1/0"], 2),
    case("bad_decimal", &["matrep", "1."], 2),
    case("bad_subcommand", &["frobnicate", "1"], 2),
    case("bad_missing_arg", &["sylvester", "1+e1"], 2),
];

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

pub fn argv(case: &Case) -> Vec<&'static str> {
    std::iter::once("cl2").chain(case.args.iter().copied()).collect()
}

/// Command line, stdout, stderr and exit status in one text.
pub fn transcript(case: &Case, out: &cl2::cli::Outcome) -> String {
    let shown: Vec<String> = case.args.iter().map(|a| format!("{a:?}")).collect();
    format!(
        "$ cl2 {}\n--- stdout\n{}--- stderr\n{}--- exit {}\n",
        shown.join(" "),
        out.stdout,
        out.stderr,
        out.code
    )
}

/// Runs a case and compares against (or rewrites) its golden transcript.
pub fn check(case: &Case) -> Result<(), String> {
    let first = cl2::cli::run(argv(case));
    let second = cl2::cli::run(argv(case));
    if first != second {
        return Err(format!("{}: output differs between runs", case.name));
    }
    if first.code != case.code {
        return Err(format!("{}: exit {} (expected {})", case.name, first.code, case.code));
    }
    let text = transcript(case, &first);
    let path = golden_dir().join(format!("{}.txt", case.name));
    if std::env::var_os("CL2_UPDATE_GOLDEN").is_some() {
        std::fs::create_dir_all(golden_dir()).map_err(|e| e.to_string())?;
        std::fs::write(&path, &text).map_err(|e| e.to_string())?;
        return Ok(());
    }
    let want = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if want != text {
        return Err(format!("{}: transcript differs from {}", case.name, path.display()));
    }
    Ok(())
}
