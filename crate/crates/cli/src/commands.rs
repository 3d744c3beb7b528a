//! Subcommand implementations.

use std::path::Path;

use airystable::airy::airy_by;
use airystable::bridge::{cauchy_pdf, inverse_params, stable_pdf_by, subordinated_scale};
use airystable::density::{subordinated_density_by, u_odd};
use airystable::oracles::{cms_stable_samples, kanter_subordinator_samples};
use airystable::verify::run_suite;
use airystable::{
    Error, EvalMethod, EvalResult, GridSpec, OrderSpec, QuadratureConfig, StableParams,
    SubordinationParams,
};

use crate::output::{num, Table};
use crate::{Command, EvalArgs, GridArgs, OrderArgs, SampleKind};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INVALID: u8 = 2;
pub const EXIT_NUMERICAL: u8 = 3;
pub const EXIT_VERIFY: u8 = 4;

/// A failed command: exit code and message for standard error.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parameter(_) | Error::Domain(_) | Error::Configuration(_) => EXIT_INVALID,
            Error::Cancellation { .. } | Error::Convergence { .. } => EXIT_NUMERICAL,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INVALID,
        message: message.into(),
    }
}

type Outcome = Result<u8, Failure>;

pub fn run(command: Command) -> Outcome {
    match command {
        Command::Airy {
            order,
            grid,
            eval,
            out,
        } => airy(&order, &grid, &eval, out.out.as_deref()),
        Command::Density {
            order,
            theta,
            t,
            grid,
            eval,
            out,
        } => density(&order, theta, t, &grid, &eval, out.out.as_deref()),
        Command::Stable {
            nu,
            beta,
            sigma,
            mu,
            t,
            grid,
            eval,
            out,
        } => stable(nu, beta, sigma, mu, t, &grid, &eval, out.out.as_deref()),
        Command::Cauchy {
            alpha,
            t,
            grid,
            out,
        } => cauchy(alpha, t, &grid, out.out.as_deref()),
        Command::Sample {
            kind,
            theta,
            nu,
            beta,
            sigma,
            mu,
            t,
            n,
            seed,
            out,
        } => sample(
            kind,
            theta,
            nu,
            beta,
            sigma,
            mu,
            t,
            n,
            seed,
            out.out.as_deref(),
        ),
        Command::Verify { suite, out } => {
            let rows = run_suite(suite)?;
            let mut table = Table::new("check_id,target,actual,tolerance,pass");
            let mut all_pass = true;
            for r in &rows {
                all_pass &= r.pass;
                table.row(&[
                    r.check_id.clone(),
                    num(r.target),
                    num(r.actual),
                    num(r.tolerance),
                    r.pass.to_string(),
                ]);
            }
            emit(&table, out.out.as_deref())?;
            if all_pass {
                Ok(EXIT_OK)
            } else {
                eprintln!(
                    "verification failed: {} of {} checks did not pass",
                    rows.iter().filter(|r| !r.pass).count(),
                    rows.len()
                );
                Ok(EXIT_VERIFY)
            }
        }
    }
}

fn emit(table: &Table, out: Option<&Path>) -> Result<(), Failure> {
    table
        .emit(out)
        .map_err(|e| invalid(format!("cannot write output: {e}")))?;
    if out.is_some() {
        eprintln!("wrote {} rows", table.rows());
    }
    Ok(())
}

fn grid_spec(g: &GridArgs) -> Result<GridSpec, Failure> {
    Ok(GridSpec::new(g.x_min, g.x_max, g.step)?)
}

fn order_spec(o: &OrderArgs) -> Result<OrderSpec, Failure> {
    match (o.alpha, o.odd) {
        (Some(a), None) => Ok(OrderSpec::fractional(a)?),
        (None, Some(n)) => Ok(OrderSpec::odd(n)?),
        _ => Err(invalid("give exactly one of --alpha and --odd")),
    }
}

fn quadrature_config(e: &EvalArgs) -> Result<QuadratureConfig, Failure> {
    let cfg = QuadratureConfig {
        abs_tol: e.tol,
        ..QuadratureConfig::default()
    };
    cfg.validate()?;
    Ok(cfg)
}

/// Evaluates `f` on every grid point; the first failure aborts the table.
fn tabulate(
    header: &str,
    grid: &GridSpec,
    f: impl Fn(f64) -> airystable::Result<EvalResult>,
) -> Result<Table, Failure> {
    let mut table = Table::new(header);
    for x in grid.points() {
        let r = f(x).map_err(|e| {
            let mut failure = Failure::from(e);
            failure.message = format!("at x = {x}: {}", failure.message);
            failure
        })?;
        table.row(&[num(x), num(r.value), num(r.err_bound), r.terms.to_string()]);
    }
    Ok(table)
}

fn airy(order: &OrderArgs, grid: &GridArgs, eval: &EvalArgs, out: Option<&Path>) -> Outcome {
    let order = order_spec(order)?;
    let grid = grid_spec(grid)?;
    let cfg = quadrature_config(eval)?;
    let method = EvalMethod::from(eval.method);
    let table = tabulate("x,value,abs_err_bound,terms", &grid, |x| {
        airy_by(&order, x, method, &cfg)
    })?;
    emit(&table, out)?;
    Ok(EXIT_OK)
}

fn density(
    order: &OrderArgs,
    theta: f64,
    t: f64,
    grid: &GridArgs,
    eval: &EvalArgs,
    out: Option<&Path>,
) -> Outcome {
    let order = order_spec(order)?;
    let grid = grid_spec(grid)?;
    let cfg = quadrature_config(eval)?;
    let method = EvalMethod::from(eval.method);
    let params = SubordinationParams::new(order.effective_alpha(), theta)?;
    params.require_series_convergence()?;
    let header = "x,density,abs_err_bound,terms";
    let table = match (order, method) {
        (OrderSpec::Odd(n), EvalMethod::Series) if theta == 1.0 => {
            tabulate(header, &grid, |x| u_odd(n, x, t))?
        }
        _ => tabulate(header, &grid, |x| {
            subordinated_density_by(&params, x, t, method, &cfg)
        })?,
    };
    emit(&table, out)?;
    Ok(EXIT_OK)
}

#[allow(clippy::too_many_arguments)]
fn stable(
    nu: f64,
    beta: f64,
    sigma: f64,
    mu: f64,
    t: f64,
    grid: &GridArgs,
    eval: &EvalArgs,
    out: Option<&Path>,
) -> Outcome {
    if nu == 1.0 {
        return Err(invalid(
            "nu = 1 is the Cauchy case, which has no tangent form; use the `cauchy` command",
        ));
    }
    let params = StableParams::new(nu, beta, sigma, mu)?;
    params.require_series_scope()?;
    let grid = grid_spec(grid)?;
    let cfg = quadrature_config(eval)?;
    let method = EvalMethod::from(eval.method);
    let sub = inverse_params(nu, beta.abs())?;
    eprintln!(
        "alpha={} theta={} sigma0={}",
        num(sub.alpha),
        num(sub.theta),
        num(subordinated_scale(&sub, t))
    );
    let mut table = Table::new("x,pdf");
    for x in grid.points() {
        let r = stable_pdf_by(&params, t, x, method, &cfg).map_err(Failure::from)?;
        table.row(&[num(x), num(r.value)]);
    }
    emit(&table, out)?;
    Ok(EXIT_OK)
}

fn cauchy(alpha: f64, t: f64, grid: &GridArgs, out: Option<&Path>) -> Outcome {
    let grid = grid_spec(grid)?;
    let mut table = Table::new("x,pdf");
    for x in grid.points() {
        table.row(&[num(x), num(cauchy_pdf(alpha, t, x)?)]);
    }
    emit(&table, out)?;
    Ok(EXIT_OK)
}

#[allow(clippy::too_many_arguments)]
fn sample(
    kind: SampleKind,
    theta: Option<f64>,
    nu: Option<f64>,
    beta: Option<f64>,
    sigma: f64,
    mu: f64,
    t: f64,
    n: u64,
    seed: u64,
    out: Option<&Path>,
) -> Outcome {
    let values = match kind {
        SampleKind::Subordinator => {
            let theta = theta.ok_or_else(|| invalid("subordinator sampling needs --theta"))?;
            kanter_subordinator_samples(theta, t, n, seed)?
        }
        SampleKind::Stable => {
            let (nu, beta) = match (nu, beta) {
                (Some(nu), Some(beta)) => (nu, beta),
                _ => return Err(invalid("stable sampling needs --nu and --beta")),
            };
            let params = StableParams::new(nu, beta, sigma, mu)?;
            cms_stable_samples(&params, t, n, seed)?
        }
    };
    let mut table = Table::new("index,value");
    for (i, v) in values.iter().enumerate() {
        table.row(&[i.to_string(), num(*v)]);
    }
    emit(&table, out)?;
    Ok(EXIT_OK)
}
