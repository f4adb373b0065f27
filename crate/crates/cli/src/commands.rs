use alphasun_core::bounds::{bound_report, ratio_d_over_t, ratio_f_over_t};
use alphasun_core::density::{
    density_first_order, density_mellin_barnes, density_second_order, density_smallx_second, mellin_barnes_band,
    simon_constant, MbOptions,
};
use alphasun_core::sequences::{
    a_from_t, d_from_t, f_from_divisors, f_ppe_recursive, t_alpha_series, t_recurrence, t_stirling, t_table,
};
use alphasun_core::verify::{run_suite, suites, VerifyOptions};
use alphasun_core::Params;
use rayon::prelude::*;

use crate::table::{cell, ok_cell, write_csv};
use crate::{CliError, CliResult, RunConfig, FIGURE_GAMMAS};

fn rel(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        ((a - b) / b).abs()
    }
}

fn header(cols: &[&str]) -> Vec<String> {
    cols.iter().map(|s| s.to_string()).collect()
}

/// One row per n = 0..=n_max with every route to t and f side by side.
pub fn cmd_coeffs(c: &RunConfig) -> CliResult<()> {
    let p = c.params()?;
    let prec = c.precision();
    let n_max = c.n_max;
    let t = t_table(&p, n_max);
    let rec = t_recurrence(&p, n_max);
    let a = a_from_t(&t)?;
    let d = d_from_t(&t)?;
    let m = c.m_max.min(n_max);
    let fr = f_ppe_recursive(&p, m)?;
    let fd = f_from_divisors(&d, n_max)?;
    let rows: Vec<Vec<String>> = (0..=n_max)
        .into_par_iter()
        .map(|n| {
            let ts = Some(t_stirling(&p, n));
            let tr = rec.get(n);
            let tser = match t_alpha_series(&p, n, &prec) {
                Ok(v) => Some(v),
                Err(e) => {
                    log::warn!("alpha series at n = {n}: {e}");
                    None
                }
            };
            let (an, dn, fa, fb) = if n == 0 {
                (Some(1.0), Some(0.0), None, None)
            } else {
                (a.get(n), d.get(n), fr.get(n), fd.get(n))
            };
            let mut worst = 0.0f64;
            let ts_vals: Vec<f64> = [ts, tr, tser].into_iter().flatten().filter(|v| v.is_finite()).collect();
            for i in 0..ts_vals.len() {
                for j in i + 1..ts_vals.len() {
                    worst = worst.max(rel(ts_vals[i], ts_vals[j]));
                }
            }
            if let (Some(x), Some(y)) = (fa, fb) {
                worst = worst.max(rel(x, y));
            }
            vec![
                n.to_string(),
                cell(ts),
                cell(tr),
                cell(tser),
                cell(an),
                cell(dn),
                cell(fa),
                cell(fb),
                cell(Some(worst)),
            ]
        })
        .collect();
    write_csv(
        c.out.as_deref(),
        &header(&[
            "n",
            "t_stirling",
            "t_recurrence",
            "t_series",
            "a",
            "d",
            "f_recursive",
            "f_divisor",
            "max_rel_disagreement",
        ]),
        &rows,
    )
}

/// Exact t_n next to its bounds, estimates and the two ratio sequences.
pub fn cmd_bounds(c: &RunConfig) -> CliResult<()> {
    let p = c.params()?;
    let prec = c.precision();
    let rd = ratio_d_over_t(&p, c.n_max.max(2)).ok();
    let rf = ratio_f_over_t(&p, c.n_max.max(2)).ok();
    let rows: Vec<Vec<String>> = (1..=c.n_max)
        .into_par_iter()
        .map(|n| {
            let r = bound_report(&p, n, &prec)?;
            Ok(vec![
                n.to_string(),
                cell(Some(r.t_exact)),
                cell(r.lower),
                cell(r.upper),
                cell(Some(r.sup_bound)),
                cell(Some(r.estimate_steepest)),
                cell(Some(r.estimate_simple)),
                cell(rd.as_ref().and_then(|s| s.get(n))),
                cell(rf.as_ref().and_then(|s| s.get(n))),
            ])
        })
        .collect::<alphasun_core::Result<_>>()?;
    write_csv(
        c.out.as_deref(),
        &header(&[
            "n",
            "t_exact",
            "lower",
            "upper",
            "sup_bound",
            "est_steepest",
            "est_simple",
            "ratio_d",
            "ratio_f",
        ]),
        &rows,
    )
}

fn constant_row(alpha: f64, gamma: f64, k: usize) -> Vec<String> {
    match Params::new(alpha, gamma).and_then(|p| simon_constant(&p, k)) {
        Ok(r) => vec![
            cell(Some(alpha)),
            cell(Some(r.exact_c)),
            cell(Some(r.first_order_c)),
            cell(Some(r.second_order_c.abs())),
        ],
        Err(e) => {
            log::warn!("constant at alpha = {alpha}, gamma = {gamma}: {e}");
            vec![cell(Some(alpha)), String::new(), String::new(), String::new()]
        }
    }
}

/// fig1..fig4: constant, first- and |second|-order approximations for gamma = 0.5, 1, 2, 4;
/// fig5: the constant for each gamma in the gamma list.
pub fn cmd_figures(c: &RunConfig) -> CliResult<()> {
    let dir = c.out.clone().unwrap_or_else(|| ".".into());
    std::fs::create_dir_all(&dir).map_err(|e| CliError::io(dir.display().to_string(), e))?;
    let alphas = c.alpha_grid.points();
    for (i, &g) in FIGURE_GAMMAS.iter().enumerate() {
        let rows: Vec<Vec<String>> = alphas.par_iter().map(|&a| constant_row(a, g, c.k)).collect();
        let path = dir.join(format!("fig{}.csv", i + 1));
        write_csv(
            Some(&path),
            &header(&["alpha", "c_exact", "c_first_order", "abs_c_second_order"]),
            &rows,
        )?;
        log::info!("wrote {}", path.display());
    }
    let mut head = vec!["alpha".to_string()];
    head.extend(c.gamma_list.iter().map(|g| format!("c_gamma_{g:?}")));
    let rows: Vec<Vec<String>> = alphas
        .par_iter()
        .map(|&a| {
            let mut row = vec![cell(Some(a))];
            for &g in &c.gamma_list {
                row.push(ok_cell(
                    &format!("constant at alpha = {a}, gamma = {g}"),
                    Params::new(a, g).and_then(|p| simon_constant(&p, c.k)).map(|r| r.exact_c),
                ));
            }
            row
        })
        .collect();
    write_csv(Some(&dir.join("fig5.csv")), &head, &rows)
}

/// Density approximations on the x grid; the contour column is empty outside its band.
pub fn cmd_density(c: &RunConfig) -> CliResult<()> {
    let p = c.params()?;
    let opts = MbOptions {
        truncation_j: c.j,
        ..MbOptions::default()
    };
    let rows: Vec<Vec<String>> = c
        .x_grid
        .par_iter()
        .map(|&x| {
            let mb = if mellin_barnes_band(&p, x) {
                ok_cell(&format!("contour density at x = {x}"), density_mellin_barnes(&p, x, &opts))
            } else {
                String::new()
            };
            vec![
                cell(Some(x)),
                ok_cell("first-order density", density_first_order(&p, x)),
                ok_cell(&format!("second-order density at x = {x}"), density_second_order(&p, x)),
                ok_cell(&format!("small-x density at x = {x}"), density_smallx_second(&p, x)),
                mb,
            ]
        })
        .collect();
    write_csv(
        c.out.as_deref(),
        &header(&["x", "h_first", "h_second", "h_smallx", "h_mb"]),
        &rows,
    )
}

/// Run the suites (or the one named by --suite) and print one line per check.
pub fn cmd_verify(c: &RunConfig) -> CliResult<()> {
    let all = suites();
    let chosen: Vec<_> = all
        .iter()
        .filter(|s| c.suite.as_deref().map_or(true, |f| s.name == f))
        .collect();
    if chosen.is_empty() {
        let names: Vec<&str> = all.iter().map(|s| s.name).collect();
        return Err(CliError::Config(format!(
            "unknown suite {:?}; known: {}",
            c.suite.as_deref().unwrap_or(""),
            names.join(", ")
        )));
    }
    let opts = VerifyOptions { rel_tol: c.rel_tol };
    let results: Vec<_> = chosen.par_iter().map(|s| run_suite(s, opts)).collect();
    let mut lines = Vec::new();
    let mut failed = 0;
    for checks in &results {
        for ch in checks {
            if !ch.passed {
                failed += 1;
            }
            let tol = ch.tolerance.map_or("-".to_string(), |t| format!("{t:.1e}"));
            lines.push(format!(
                "{} {:<20} {:<64} measured {:.3e} tol {}",
                if ch.passed { "PASS" } else { "FAIL" },
                ch.suite,
                ch.name,
                ch.measured,
                tol
            ));
        }
    }
    let suites_failed = results.iter().filter(|cs| cs.iter().any(|c| !c.passed)).count();
    lines.push(format!(
        "{} suites, {} checks, {} failed",
        results.len(),
        results.iter().map(Vec::len).sum::<usize>(),
        failed
    ));
    let text = lines.join("\n") + "\n";
    match &c.out {
        Some(path) => std::fs::write(path, &text).map_err(|e| CliError::io(path.display().to_string(), e))?,
        None => print!("{text}"),
    }
    if suites_failed > 0 {
        return Err(CliError::VerifyFailed(failed));
    }
    Ok(())
}

