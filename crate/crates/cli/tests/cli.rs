use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_alphasun"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn rows(csv: &str) -> Vec<Vec<String>> {
    csv.lines().map(|l| l.split(',').map(str::to_string).collect()).collect()
}

fn num(s: &str) -> f64 {
    s.parse().unwrap()
}

#[test]
fn coeffs_reference_rows() {
    let (code, out, _) = run(&["coeffs", "--alpha", "0.5", "--gamma", "1", "--n-max", "20"]);
    assert_eq!(code, 0);
    let r = rows(&out);
    assert_eq!(
        r[0].join(","),
        "n,t_stirling,t_recurrence,t_series,a,d,f_recursive,f_divisor,max_rel_disagreement"
    );
    assert_eq!(r.len(), 22);
    assert_eq!(num(&r[2][1]), -1.0);
    assert_eq!(num(&r[2][6]), 1.0);
    for row in &r[1..] {
        assert!(num(&row[8]) < 1e-9, "row {}", row[0]);
    }
}

#[test]
fn coeffs_vanish_at_alpha_zero() {
    let (code, out, _) = run(&["coeffs", "--alpha", "0", "--gamma", "2", "--n-max", "8"]);
    assert_eq!(code, 0);
    for row in &rows(&out)[2..] {
        for c in &row[1..8] {
            assert_eq!(c, "0.0000000000000000e0");
        }
    }
}

#[test]
fn output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for p in [&a, &b] {
        let (code, _, _) = run(&["bounds", "--alpha", "0.4", "--gamma", "0.6", "--n-max", "30", "--threads", "3", "--out", p.to_str().unwrap()]);
        assert_eq!(code, 0);
    }
    let (x, y) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(x, y);
    assert!(!x.contains(&b'\r'));
}

#[test]
fn bounds_sandwich_holds() {
    let (code, out, _) = run(&["bounds", "--alpha", "0.5", "--gamma", "0.5", "--n-max", "40"]);
    assert_eq!(code, 0);
    for row in &rows(&out)[5..] {
        let t = num(&row[1]).abs();
        assert!(num(&row[2]) <= t && t <= num(&row[3]) && t <= num(&row[4]));
    }
}

#[test]
fn density_columns() {
    let (code, out, _) = run(&["density", "--alpha", "0", "--gamma", "1", "--x-grid", "0.1,0.5,1,2,4,10"]);
    assert_eq!(code, 0);
    let r = rows(&out);
    assert_eq!(r[0].join(","), "x,h_first,h_second,h_smallx,h_mb");
    for row in &r[1..] {
        let x = num(&row[0]);
        let want = x.powi(-2) * (-1.0 / x).exp();
        assert!((num(&row[1]) / want - 1.0).abs() < 1e-14);
    }
    // outside the contour band
    assert_eq!(r[1][4], "");
    assert_eq!(r[6][4], "");
    assert!((num(&r[3][4]) / (-1.0f64).exp() - 1.0).abs() < 1e-4);
}

#[test]
fn density_second_over_smallx_tends_to_one() {
    let (code, out, _) = run(&["density", "--alpha", "0.3", "--gamma", "2", "--x-grid", "0.08,0.15,0.3,1"]);
    assert_eq!(code, 0);
    let r = rows(&out);
    let ratio: Vec<f64> = r[1..].iter().map(|row| (num(&row[2]) / num(&row[3]) - 1.0).abs()).collect();
    assert!(ratio[0] < ratio[1] && ratio[1] < ratio[2]);
    assert!(r[1..].iter().all(|row| num(&row[1]) > 0.0 && num(&row[2]) > 0.0));
}

#[test]
fn figures_write_five_files() {
    let dir = tempfile::tempdir().unwrap();
    let (code, _, _) = run(&["figures", "--alpha-grid", "0:0.2:0.1", "--K", "2000", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    for (i, g) in [0.5, 1.0, 2.0, 4.0].iter().enumerate() {
        let text = std::fs::read_to_string(dir.path().join(format!("fig{}.csv", i + 1))).unwrap();
        let r = rows(&text);
        assert_eq!(r[0].join(","), "alpha,c_exact,c_first_order,abs_c_second_order");
        assert_eq!(r.len(), 4);
        assert_eq!(num(&r[1][1]), *g);
    }
    let text = std::fs::read_to_string(dir.path().join("fig5.csv")).unwrap();
    assert!(text.starts_with("alpha,c_gamma_0.5,c_gamma_0.75,c_gamma_1.0,"));
    assert!(text.lines().next().unwrap().ends_with(",c_gamma_2.0"));
}

#[test]
fn verify_filter_and_failure() {
    let (code, out, _) = run(&["verify", "--suite", "ppe-slope"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.lines().all(|l| !l.starts_with("FAIL")));
    assert!(out.contains("ppe-slope"));
    let (code, _, _) = run(&["verify", "--suite", "t-consistency", "--rel-tol", "1e-30"]);
    assert_eq!(code, 1);
    let (code, _, _) = run(&["verify", "--suite", "no-such-suite"]);
    assert_eq!(code, 2);
}

#[test]
fn bad_configs_exit_two() {
    assert_eq!(run(&["coeffs", "--alpha", "1.5"]).0, 2);
    assert_eq!(run(&["figures", "--alpha-grid", "0:0.999:0.1"]).0, 2);
    assert_eq!(run(&["coeffs", "--n-max", "abc"]).0, 2);
    assert_eq!(run(&["density", "--x-grid", "-1,2"]).0, 2);
    assert_eq!(run(&["coeffs", "--out", "/no/such/dir/x.csv"]).0, 2);
}

#[test]
fn numerical_failure_exits_three() {
    // the saddle-point quantities are undefined at alpha = 0
    assert_eq!(run(&["bounds", "--alpha", "0", "--gamma", "1"]).0, 3);
}
