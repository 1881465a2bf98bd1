use std::process::Command;

use redrep::RootDatum;
use redrep_cli::{
    decompose, measured_multiset, orbit, parse_lambda, predicted_multiset_of, verify, Algebra, Certificate, ChiKind,
    DecomposeRequest, Suite,
};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_redrep"))
}

fn request(n: usize, p: u32, algebra: Algebra, chi: ChiKind, lambda: &[i64]) -> DecomposeRequest {
    DecomposeRequest { n, p, algebra, chi, lambda: lambda.to_vec(), dump_matrices: false, max_dim: None }
}

#[test]
fn decompose_examples() {
    let a = decompose(&request(3, 3, Algebra::Sl, ChiKind::Subregular, &[0, 0])).unwrap();
    assert_eq!(a.results.composition.iter().map(|f| f.dim).collect::<Vec<_>>(), vec![9, 9, 9]);
    assert_eq!(measured_multiset(&a).len(), 1);
    assert!(a.all_checks_pass());

    let b = decompose(&request(3, 3, Algebra::Sl, ChiKind::Regular, &[2, 2])).unwrap();
    assert!(b.results.flags.simple);
    assert_eq!(b.results.dim, 27);
    assert_eq!(b.results.flags.in_w_dot_zero, Some(false));

    let c = decompose(&request(2, 2, Algebra::Sl, ChiKind::Regular, &[0])).unwrap();
    assert_eq!(c.results.composition.len(), 2);
    assert!(c.results.composition.iter().all(|f| f.dim == 1));
    assert!(c.all_checks_pass());
}

fn no_floats(v: &serde_json::Value) -> bool {
    match v {
        serde_json::Value::Number(n) => n.is_u64() || n.is_i64(),
        serde_json::Value::Array(a) => a.iter().all(no_floats),
        serde_json::Value::Object(o) => o.values().all(no_floats),
        _ => true,
    }
}

#[test]
fn certificate_round_trip_is_byte_identical() {
    let mut req = request(3, 3, Algebra::Gl, ChiKind::Subregular, &[1, 0, 0]);
    req.dump_matrices = true;
    for r in [req, request(2, 2, Algebra::Sl, ChiKind::Regular, &[1]), request(3, 2, Algebra::Sl, ChiKind::Regular, &[0, 1])] {
        let cert = decompose(&r).unwrap();
        let text = cert.to_json();
        let parsed = Certificate::from_json(&text).unwrap();
        assert_eq!(parsed, cert);
        assert_eq!(parsed.to_json(), text);
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string_pretty(&value).unwrap() + "\n", text);
        assert!(no_floats(&value));
    }
}

#[test]
fn weights_are_recorded_in_both_coordinate_systems() {
    let cert = decompose(&request(3, 3, Algebra::Gl, ChiKind::Regular, &[2, 0, 1])).unwrap();
    assert_eq!(cert.meta.lambda.eps, vec![2, 0, 1]);
    assert_eq!(cert.meta.lambda.cartan, vec![2, 2]);
    let total: usize = cert.results.weight_character.iter().map(|w| w.multiplicity).sum();
    assert_eq!(total, 27);
}

#[test]
fn orbit_examples() {
    let r = orbit(3, 3, Algebra::Sl, &[1, 0]).unwrap();
    assert_eq!(r.r, vec![0, 2, 1]);
    let mut dims: Vec<usize> = r.predicted_factors.iter().map(|f| f.dim).collect();
    dims.sort_unstable();
    assert_eq!(dims, vec![9, 18]);
    assert_eq!(orbit(3, 3, Algebra::Sl, &[0, 0]).unwrap().in_w_dot_zero, Some(true));
    let b = orbit(3, 3, Algebra::Sl, &[2, 2]).unwrap();
    assert_eq!(b.r[0], 3);
    assert_eq!(b.predicted_factors.len(), 1);
    assert_eq!(b.predicted_factors[0].dim, 27);
    assert_eq!(orbit(3, 2, Algebra::Sl, &[0, 0]).unwrap().in_w_dot_zero, None);
}

#[test]
fn orbit_predictions_match_decompositions_on_the_full_sweep() {
    for algebra in [Algebra::Sl, Algebra::Gl] {
        let datum = match algebra {
            Algebra::Sl => RootDatum::sl(3, 3).unwrap(),
            Algebra::Gl => RootDatum::gl(3, 3).unwrap(),
        };
        for w in datum.all_weights() {
            let lambda: Vec<i64> = w.coords().iter().map(|&x| x as i64).collect();
            let report = orbit(3, 3, algebra, &lambda).unwrap();
            let cert = decompose(&request(3, 3, algebra, ChiKind::Subregular, &lambda)).unwrap();
            assert!(cert.all_checks_pass(), "{lambda:?}");
            assert_eq!(predicted_multiset_of(&report), measured_multiset(&cert), "{lambda:?}");
            for f in &cert.results.composition {
                assert!(report.predicted_factors.iter().any(|q| q.label == f.label && q.dim == f.dim));
            }
        }
    }
}

#[test]
fn suites_report_per_claim() {
    assert!(verify(Suite::Regular3).all_pass());
    let sub = verify(Suite::Subregular3);
    assert_eq!(sub.claims.len(), 4);
    assert!(sub.all_pass());
    let gl = verify(Suite::Glcorpus);
    assert_eq!(gl.claims.len(), 27 + 9);
    assert!(gl.all_pass());
}

#[test]
fn lambda_parsing() {
    assert_eq!(parse_lambda("1, -1,4", 3).unwrap(), vec![1, 2, 1]);
    assert!(parse_lambda("1,x", 3).is_err());
    assert_eq!(parse_lambda("", 3).unwrap(), Vec::<i64>::new());
}

#[test]
fn binary_writes_certificates_that_round_trip() {
    let path = std::env::temp_dir().join(format!("redrep-cert-{}.json", std::process::id()));
    let status = bin()
        .args(["decompose", "--n", "3", "--p", "3", "--algebra", "sl", "--chi", "subregular", "--lambda", "1,0"])
        .arg("--out")
        .arg(&path)
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    let cert = Certificate::from_json(&text).unwrap();
    assert_eq!(cert.to_json(), text);
    assert_eq!(cert.results.composition.len(), 2);
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| bin().args(args).output().unwrap().status.code();
    let base = ["decompose", "--n", "3", "--p", "3", "--algebra", "sl", "--chi", "regular"];
    let with = |extra: &[&'static str]| {
        let mut v: Vec<&str> = base.to_vec();
        v.extend_from_slice(extra);
        v
    };
    assert_eq!(code(&with(&["--lambda", "2,2", "--format", "table"])), Some(0));
    assert_eq!(code(&with(&["--lambda", "2"])), Some(2));
    assert_eq!(code(&with(&["--lambda", "a,b"])), Some(2));
    assert_eq!(code(&["decompose", "--n", "3", "--p", "4", "--algebra", "sl", "--chi", "regular", "--lambda", "0,0"]), Some(2));
    assert_eq!(code(&["decompose", "--n", "3"]), Some(2));
    assert_eq!(code(&with(&["--lambda", "0,0", "--max-dim", "26"])), Some(3));
    assert_eq!(code(&["orbit", "--n", "3", "--p", "3", "--lambda", "1,0"]), Some(0));
    assert_eq!(code(&["orbit", "--n", "3", "--p", "3", "--lambda", "1"]), Some(2));
    assert_eq!(code(&["verify", "--suite", "subregular3"]), Some(0));
    assert_eq!(code(&["verify", "--suite", "bogus"]), Some(2));
    // The u-embedding suite has a failing claim; see the README.
    assert_eq!(code(&["verify", "--suite", "uembed"]), Some(4));
}
