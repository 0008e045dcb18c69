use std::io::Write;
use std::process::Command as Process;

use seqcm_cli::report::CommandResult;
use seqcm_cli::{fixtures, parse_input, run_command, Command, ParseError, ReportDocument, RunOptions};

fn run(text: &str) -> ReportDocument {
    run_command(&parse_input(text).unwrap(), RunOptions::default()).unwrap()
}

fn parse_err(text: &str) -> ParseError {
    parse_input(text).expect_err("input should be rejected")
}

#[test]
fn fixtures_replay_exactly() {
    for f in fixtures() {
        let doc = run(f.input);
        assert_eq!(doc.to_json(), f.expected, "fixture {}", f.name);
    }
}

#[test]
fn reports_round_trip() {
    for f in fixtures() {
        let doc = ReportDocument::from_json(f.expected).unwrap();
        assert_eq!(doc.to_json(), f.expected, "fixture {}", f.name);
    }
}

#[test]
fn fixture_names() {
    let names: Vec<&str> = fixtures().iter().map(|f| f.name).collect();
    for n in ["planes-xy-zt-5v", "line-plane-embedded", "embedded-xy-4v", "planes-xy-zt-4v"] {
        assert!(names.contains(&n), "{n}");
        assert!(seqcm_cli::fixtures::fixture(n).is_some());
    }
}

#[test]
fn comma_separated_intersection() {
    let s = parse_input("ring Q[x,y,z,t,w]; ideal I = intersect((x,y),(z,t)); profile I").unwrap();
    assert!(matches!(s.command, Command::Profile));
    let gens: Vec<String> = s.target().monomial.as_ref().unwrap().to_polynomials().iter().map(|g| g.to_string()).collect();
    assert_eq!(gens, vec!["x*z", "x*t", "y*z", "y*t"]);
}

#[test]
fn one_variable_session() {
    let doc = run("ring Q[x]; ideal J = (x^2); profile J");
    let CommandResult::Profile(p) = doc.result else { panic!("profile expected") };
    assert_eq!((p.dim, p.depth, p.p, p.sp.sp), (0, 0, -1, -1));
    assert!(p.cm && p.scm);
}

#[test]
fn classify_line_plane() {
    let doc = run("ring Q[x,y,z]\nideal I = (x^2*y, x*y^2, x*z)\nclassify I y");
    let CommandResult::Classify(c) = doc.result else { panic!("classify expected") };
    assert!(c.sequential_f && !c.f_element && !c.sequential);
}

#[test]
fn decide_embedded_model_is_scm() {
    let doc = run("ring Q[x,y,z,t]\nideal I = (x^2*y, x*y^2)\ndecide scm I");
    let CommandResult::Decide(d) = doc.result else { panic!("decide expected") };
    assert!(d.verdict);
}

#[test]
fn non_monomial_ideals_work_where_allowed() {
    let doc = run("ring Q[x,y,z]\nideal I = (x*y - z^2)\ndecide cm I");
    let CommandResult::Decide(d) = doc.result else { panic!("decide expected") };
    assert!(d.verdict);
    assert!(!doc.ideal.monomial);
    let e = parse_err("ring Q[x,y,z]\nideal I = (x*y - z^2)\nprofile I");
    assert_eq!((e.line, e.col), (3, 9));
    assert!(e.message.contains("not monomial"), "{}", e.message);
}

#[test]
fn sums_and_names() {
    let doc = run("ring Q[x,y,z]\nideal A = (x)\nideal B = A + (y^2) + (x*z)\ninvariants B");
    assert_eq!(doc.ideal.generators, vec!["x", "y^2"]);
}

#[test]
fn find_seq_reports_obstruction() {
    let doc = run("ring Q[x,y,z,t]\nideal I = intersect((x,y); (z,t))\nfind-seq I sequential 2");
    let CommandResult::FindSeq(f) = doc.result else { panic!("find-seq expected") };
    assert!(!f.found);
    assert_eq!(f.obstruction, Some(1));
}

#[test]
fn check_seq_locates_failure() {
    let doc = run("ring Q[x,y,z,t,w]\nideal I = intersect((x,y); (z,t))\ncheck-seq I sequential x + z + w, y - t + w, x + y + z + t + w");
    let CommandResult::CheckSeq(s) = doc.result else { panic!("check-seq expected") };
    assert!(s.sop && !s.verdict);
    assert!(s.first_failure.is_some());
}

#[test]
fn diagnostics() {
    let e = parse_err("element f = x + z\n");
    assert_eq!((e.line, e.col), (1, 13));
    assert!(e.message.contains("undeclared name `x`"), "{}", e.message);

    let e = parse_err("ring Q[x,y]\nelement f = x + y^2\nclassify I f");
    assert_eq!((e.line, e.col), (2, 13));
    assert!(e.message.contains("not homogeneous"));

    let e = parse_err("ring Q[x,y]\nideal I = (x, q)\nprofile I");
    assert_eq!((e.line, e.col), (2, 15));
    assert!(e.message.contains('q'), "{}", e.message);

    let e = parse_err("ring Q[x,y]\nideal I = (x)\nprofile K");
    assert!(e.message.contains("undeclared name `K`"));

    let e = parse_err("ring Q[x,y]\nideal I = (x)\nfind-seq I bogus 1");
    assert!(e.message.contains("bogus"));

    let e = parse_err("ring Q[x,y]\nideal I = (x)\nprofile I\nprofile I");
    assert_eq!(e.line, 4);

    let e = parse_err("ring Q[x,y]\nideal I = (x)\n");
    assert!(e.message.contains("missing command"));

    let e = parse_err("ring Q[x,y]\nideal I = intersect((x); (x + y^2))\nprofile I");
    assert!(e.message.contains("not homogeneous") || e.message.contains("monomial"), "{}", e.message);

    let e = parse_err("ring Q[x,x]\n");
    assert_eq!(e.line, 1);

    let e = parse_err("ring Q[x]\nideal I = (x\nprofile I");
    assert!(e.line >= 2);

    let e = parse_err("ring Q[x]\nelement f = 3\nclassify I f");
    assert!(e.message.contains("degree zero"));
}

fn seqcm(input: &str, args: &[&str]) -> std::process::Output {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(input.as_bytes()).unwrap();
    Process::new(env!("CARGO_BIN_EXE_seqcm")).arg(file.path()).args(args).output().unwrap()
}

#[test]
fn exit_codes() {
    let ok = seqcm("ring Q[x,y]\nideal I = (x*y)\ndecide cm I", &[]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("cm: true"));

    let parse = seqcm("ring Q[x,y]\nideal I = (x*y)\nfrobnicate I", &[]);
    assert_eq!(parse.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&parse.stderr).contains(":3:1: error: unknown statement `frobnicate`"));

    // a length beyond the dimension is an engine error
    let engine = seqcm("ring Q[x,y]\nideal I = (x*y)\nfind-seq I regular 3", &[]);
    assert_eq!(engine.status.code(), Some(1));

    let unit = seqcm("ring Q[x,y]\nideal I = (x, 1)\nprofile I", &[]);
    assert_eq!(unit.status.code(), Some(1));
}

#[test]
fn json_output_is_byte_identical_across_runs() {
    let input = "ring Q[x,y,z,t]\nideal I = (x^2*y, x*y^2)\nharness I";
    let a = seqcm(input, &["--format", "json", "--samples", "6", "--seed", "3"]);
    let b = seqcm(input, &["--format", "json", "--samples", "6", "--seed", "3"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let doc = ReportDocument::from_json(&String::from_utf8(a.stdout).unwrap()).unwrap();
    assert_eq!((doc.seed, doc.samples, doc.timing_ms), (3, 6, None));
    let timed = seqcm(input, &["--format", "json", "--samples", "2", "--timing"]);
    assert!(ReportDocument::from_json(&String::from_utf8(timed.stdout).unwrap()).unwrap().timing_ms.is_some());
}
