use std::f64::consts::FRAC_PI_4;
use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use airystable::bridge::inverse_params;
use airystable::density::subordinated_density;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_airystable"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

/// Parses a CSV body into its header and rows of floats.
fn parse(text: &str) -> (String, Vec<Vec<f64>>) {
    let mut lines = text.lines();
    let header = lines.next().unwrap().to_string();
    let rows = lines
        .map(|l| l.split(',').map(|f| f.parse::<f64>().unwrap()).collect())
        .collect();
    (header, rows)
}

fn column(rows: &[Vec<f64>], i: usize) -> Vec<f64> {
    rows.iter().map(|r| r[i]).collect()
}

#[test]
fn airy_single_point() {
    let o = run(&[
        "airy", "--alpha", "3", "--x-min", "0", "--x-max", "0", "--step", "1",
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let (header, rows) = parse(&stdout(&o));
    assert_eq!(header, "x,value,abs_err_bound,terms");
    assert_eq!(rows.len(), 1);
    assert!((rows[0][1] - 0.3550280539).abs() < 1e-10);
}

#[test]
fn odd_and_fractional_orders_agree() {
    let grid = ["--x-min", "-2", "--x-max", "2", "--step", "0.1"];
    let a = run(&[&["airy", "--odd", "1"][..], &grid].concat());
    let b = run(&[&["airy", "--alpha", "3"][..], &grid].concat());
    let (_, ra) = parse(&stdout(&a));
    let (_, rb) = parse(&stdout(&b));
    assert_eq!(ra.len(), 41);
    for (x, y) in column(&ra, 1).iter().zip(column(&rb, 1)) {
        assert!((x - y).abs() < 1e-12);
    }
}

#[test]
fn invalid_step_writes_nothing() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("airy.csv");
    let o = run(&[
        "airy",
        "--alpha",
        "3",
        "--x-min",
        "0",
        "--x-max",
        "1",
        "--step",
        "-0.1",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 2);
    assert!(!out.exists());
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 0);
}

#[test]
fn numerical_failure_writes_nothing() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("airy.csv");
    let o = run(&[
        "airy",
        "--alpha",
        "1.5",
        "--x-min",
        "-20",
        "--x-max",
        "0",
        "--step",
        "1",
        "--method",
        "series",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 3, "{}", stderr(&o));
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 0);
}

#[test]
fn density_examples() {
    let o = run(&[
        "density", "--alpha", "2", "--x-min", "0", "--x-max", "0", "--step", "1",
    ]);
    let (header, rows) = parse(&stdout(&o));
    assert_eq!(header, "x,density,abs_err_bound,terms");
    assert!((rows[0][1] - 0.1994711402).abs() < 1e-10);

    let o = run(&[
        "density", "--alpha", "3", "--theta", "0.5", "--x-min", "-5", "--x-max", "5", "--step",
        "0.05",
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let (_, rows) = parse(&stdout(&o));
    let d = column(&rows, 1);
    assert!(d.iter().all(|v| v.is_finite()));
    let mass: f64 = d.iter().sum::<f64>() * 0.05;
    assert!((mass - 1.0).abs() < 0.05, "{mass}");
}

#[test]
fn density_rejects_small_alpha_theta() {
    let o = run(&[
        "density", "--alpha", "2", "--theta", "0.4", "--x-min", "0", "--x-max", "1", "--step",
        "0.5",
    ]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("alpha*theta > 1"), "{}", stderr(&o));
}

#[test]
fn stable_matches_subordinated_series() {
    let sub = inverse_params(1.5, 0.5).unwrap();
    let sigma0 = (sub.theta * FRAC_PI_4 * 2.0).cos().powf(1.0 / 1.5);
    let s = format!("{sigma0:.17e}");
    let o = run(&[
        "stable", "--nu", "1.5", "--beta", "0.5", "--sigma", &s, "--x-min", "0", "--x-max", "0",
        "--step", "1",
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert!(stderr(&o).contains("alpha=") && stderr(&o).contains("sigma0="));
    let (header, rows) = parse(&stdout(&o));
    assert_eq!(header, "x,pdf");
    let want = subordinated_density(&sub, 0.0, 1.0).unwrap().value;
    assert!((rows[0][1] - want).abs() < 1e-12);
}

#[test]
fn stable_reflection() {
    let grid = ["--x-min", "-3", "--x-max", "3", "--step", "0.25"];
    let p = run(&[&["stable", "--nu", "1.5", "--beta", "0.5"][..], &grid].concat());
    let m = run(&[&["stable", "--nu", "1.5", "--beta", "-0.5"][..], &grid].concat());
    let (_, rp) = parse(&stdout(&p));
    let (_, rm) = parse(&stdout(&m));
    let n = rp.len();
    for i in 0..n {
        assert!((rp[i][1] - rm[n - 1 - i][1]).abs() < 1e-14);
    }
}

#[test]
fn stable_cauchy_is_redirected() {
    let o = run(&[
        "stable", "--nu", "1", "--beta", "0.3", "--x-min", "0", "--x-max", "1", "--step", "1",
    ]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("cauchy"));
}

#[test]
fn cauchy_examples() {
    let o = run(&[
        "cauchy", "--alpha", "2", "--x-min", "0", "--x-max", "0", "--step", "1",
    ]);
    let (_, rows) = parse(&stdout(&o));
    assert!((rows[0][1] - 0.2250790790).abs() < 1e-10);

    let o = run(&[
        "cauchy", "--alpha", "2", "--x-min", "-50", "--x-max", "50", "--step", "0.001",
    ]);
    let (_, rows) = parse(&stdout(&o));
    let argmax = rows.iter().max_by(|a, b| a[1].total_cmp(&b[1])).unwrap()[0];
    assert!((argmax + FRAC_PI_4.sin()).abs() < 1e-3, "{argmax}");
    let mass: f64 = column(&rows, 1).iter().sum::<f64>() * 0.001;
    assert!((mass - 1.0).abs() < 0.01, "{mass}");
}

fn sample_to(path: &Path, args: &[&str]) -> Vec<u8> {
    let o = run(&[args, &["--out", path.to_str().unwrap()]].concat());
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    fs::read(path).unwrap()
}

#[test]
fn sampling_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "sample",
        "subordinator",
        "--theta",
        "0.5",
        "--n",
        "10",
        "--seed",
        "42",
    ];
    let a = sample_to(&dir.path().join("a.csv"), &args);
    let b = sample_to(&dir.path().join("b.csv"), &args);
    assert_eq!(a, b);
    let text = String::from_utf8(a).unwrap();
    assert!(text.starts_with("index,value\n"));
    assert_eq!(text.lines().count(), 11);
}

#[test]
fn gaussian_boundary_variance() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.csv");
    let bytes = sample_to(
        &path,
        &[
            "sample", "stable", "--nu", "2", "--beta", "0", "--t", "1.5", "--n", "1000000",
            "--seed", "7",
        ],
    );
    let (_, rows) = parse(std::str::from_utf8(&bytes).unwrap());
    let v = column(&rows, 1);
    let n = v.len() as f64;
    let mean = v.iter().sum::<f64>() / n;
    let var = v.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
    // sample variance of a normal law has standard error σ²√(2/n)
    assert!((var - 3.0).abs() < 4.0 * 3.0 * (2.0 / n).sqrt(), "{var}");
}

#[test]
fn sampling_rejects_cauchy() {
    let o = run(&["sample", "stable", "--nu", "1", "--beta", "0", "--n", "5"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn verify_airy_passes() {
    let o = run(&["verify", "airy"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "check_id,target,actual,tolerance,pass"
    );
    let rows: Vec<&str> = lines.collect();
    assert!(!rows.is_empty());
    assert!(rows.iter().all(|r| r.ends_with(",true")));
}

#[test]
fn verify_unknown_suite() {
    assert_eq!(code(&run(&["verify", "everything"])), 2);
}

#[test]
fn csv_round_trips() {
    let o = run(&[
        "airy", "--alpha", "2.5", "--x-min", "-1", "--x-max", "1", "--step", "0.1",
    ]);
    for line in stdout(&o).lines().skip(1) {
        for field in line.split(',') {
            let v: f64 = field.parse().unwrap();
            if field.contains('e') {
                assert_eq!(format!("{v:.16e}"), field);
            }
        }
    }
}
