//! Argument parsing and dispatch for the `stringy` binary.

use std::fmt::Write as _;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};
use stringy_core::combinat::{eulerian_closed, eulerian_recurrence};
use stringy_core::global::{
    arrangement_estr, estr_ci, goryunov_estr, goryunov_nodes, segre_knorrer_estr, ArrangementSpec,
    CompleteIntersectionSpec,
};
use stringy_core::localsing::{
    e_punctured, fermat_e, fermat_euler, link_hodge, milnor_number, poincare_series_a, FermatSpec,
};
use stringy_core::stringy::{assemble_estr, closed_estr, ind_str};
use stringy_core::{Rational, SingularityType, StringyExpression};

use crate::render::{expression_json, integer_json, polynomial_json, rational_json, Format, Table};
use crate::tables;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "stringy", version, about = "Exact string-theoretic invariants of A(n, l, r) singularities")]
pub struct Cli {
    /// Output format; csv is only available for tables
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct TypeArgs {
    #[arg(long)]
    pub r: u32,
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub ell: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    Closed,
    Assembled,
    /// Compute both and fail if they differ
    Both,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Local data: weights, Milnor number, link Hodge numbers, punctured germ
    Local(TypeArgs),
    /// String-theoretic E-function, Euler number and index
    Estr {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, value_enum, default_value = "assembled")]
        method: Method,
    },
    /// Hodge data of a smooth Fermat hypersurface
    Fermat {
        #[arg(long)]
        ell: u32,
        #[arg(long)]
        dim: u32,
    },
    /// Non-central Eulerian number
    Eulerian {
        #[arg(long)]
        kappa: u32,
        #[arg(long, allow_negative_numbers = true)]
        lambda: i64,
        #[arg(long)]
        nu: u32,
        #[arg(long)]
        xi: u32,
    },
    /// Complete intersection in P^N with prescribed singularities
    Ci {
        #[arg(long = "N")]
        n_ambient: u32,
        /// Comma-separated degrees
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<u32>,
        /// Singularities as `n,ell[:count]` joined by `;`
        #[arg(long, default_value = "")]
        sing: String,
    },
    /// Nodal Goryunov quartic
    Goryunov {
        #[arg(long = "N")]
        n_ambient: u32,
        #[arg(long)]
        kappa: u32,
    },
    /// Segre-Knorrer intersection of two quadrics in P^n
    SegreKnorrer {
        #[arg(long)]
        n: u32,
    },
    /// Branched covering of P^r along a hyperplane arrangement
    Arrangement {
        #[arg(long = "N")]
        n_ambient: u32,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        t: u64,
    },
    /// Reproduce a table
    #[command(subcommand)]
    Table(TableCommand),
}

#[derive(Subcommand, Debug)]
pub enum TableCommand {
    /// e_str of A(n, 2, r) for n = 1..n_max
    Conjrem {
        #[arg(long)]
        r: u32,
        #[arg(long, default_value_t = 20)]
        n_max: u32,
    },
    Solids,
    SegreKnorrer,
    Goryunov {
        #[arg(long = "N")]
        n_ambient: u32,
    },
}

/// Reasons a command can fail after parsing.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Domain(String),
}

impl From<stringy_core::Error> for Failure {
    fn from(e: stringy_core::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

/// Parses `n,ell[:count]` entries joined by `;`. `r` is the dimension of the
/// complete intersection, `N - #degrees`.
pub fn parse_singularities(src: &str, r: u32) -> Result<Vec<(SingularityType, u64)>, Failure> {
    let bad = |item: &str, why: &str| Failure::Usage(format!("bad singularity `{item}`: {why}"));
    let mut out = Vec::new();
    for item in src.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        let (ty, count) = match item.split_once(':') {
            Some((ty, c)) => (ty, c.trim().parse::<u64>().map_err(|_| bad(item, "count is not a number"))?),
            None => (item, 1),
        };
        let (n, ell) = ty.split_once(',').ok_or_else(|| bad(item, "expected n,ell"))?;
        let n = n.trim().parse::<u32>().map_err(|_| bad(item, "n is not a number"))?;
        let ell = ell.trim().parse::<u32>().map_err(|_| bad(item, "ell is not a number"))?;
        out.push((SingularityType::new(r, n, ell)?, count));
    }
    Ok(out)
}

struct Style {
    color: bool,
}

impl Style {
    fn from_env() -> Self {
        Self {
            color: std::env::var("STRINGY_COLOR").is_ok_and(|v| v == "1"),
        }
    }

    fn line(&self, out: &mut String, label: &str, value: impl std::fmt::Display) {
        if self.color {
            let _ = writeln!(out, "\x1b[1m{label}\x1b[0m = {value}");
        } else {
            let _ = writeln!(out, "{label} = {value}");
        }
    }
}

/// What a command produced, before formatting.
enum Output {
    /// Ordered `(label, text, json)` triples.
    Record(Vec<(&'static str, String, Value)>),
    Table(Table),
}

fn rat_field(label: &'static str, x: &Rational) -> (&'static str, String, Value) {
    (label, x.to_string(), rational_json(x))
}

fn int_field(label: &'static str, x: &num_bigint::BigInt) -> (&'static str, String, Value) {
    (label, x.to_string(), integer_json(x))
}

fn expr_text(e: &StringyExpression) -> String {
    match e.to_polynomial() {
        Some(p) => p.to_string(),
        None => e.simplify().to_string(),
    }
}

fn expr_field(label: &'static str, e: &StringyExpression) -> (&'static str, String, Value) {
    let json = match e.to_polynomial() {
        Some(p) => json!({ "polynomial": polynomial_json(&p), "expression": expression_json(e) }),
        None => json!({ "expression": expression_json(e) }),
    };
    (label, expr_text(e), json)
}

fn global_fields(e: &Rational) -> Output {
    Output::Record(vec![rat_field("e_str", e), int_field("ind_str", &ind_str(e))])
}

fn estr(ty: TypeArgs, method: Method) -> Result<Output, Failure> {
    let s = SingularityType::new(ty.r, ty.n, ty.ell)?;
    let e = match method {
        Method::Closed => closed_estr(&s)?,
        Method::Assembled => assemble_estr(&s)?,
        Method::Both => {
            let a = assemble_estr(&s)?;
            let c = closed_estr(&s)?;
            if !a.equals(&c) {
                return Err(Failure::Domain(format!(
                    "closed and assembled E_str differ for {s}: {} vs {}",
                    expr_text(&c),
                    expr_text(&a)
                )));
            }
            a
        }
    };
    let euler = e.limit_at_one()?;
    Ok(Output::Record(vec![
        expr_field("E_str", &e),
        rat_field("e_str", &euler),
        int_field("ind_str", &ind_str(&euler)),
    ]))
}

fn local(ty: TypeArgs) -> Result<Output, Failure> {
    let s = SingularityType::new(ty.r, ty.n, ty.ell)?;
    let w = s.weights();
    let hodge = (0..i64::from(s.r()))
        .map(|p| link_hodge(&s, p))
        .collect::<Result<Vec<_>, _>>()?;
    let weights = w.weights().iter().map(u32::to_string).collect::<Vec<_>>().join(",");
    let hodge_text = hodge.iter().map(|h| h.to_string()).collect::<Vec<_>>().join(",");
    let e = e_punctured(&s);
    Ok(Output::Record(vec![
        ("type", s.to_string(), Value::String(s.to_string())),
        ("degree", w.degree().to_string(), json!(w.degree())),
        ("weights", weights, json!(w.weights())),
        int_field("milnor", &milnor_number(&s)),
        ("poincare", poincare_series_a(&s).to_string(), Value::String(poincare_series_a(&s).to_string())),
        ("link_hodge", hodge_text, Value::Array(hodge.iter().map(integer_json).collect())),
        ("E_punctured", e.to_string(), polynomial_json(&e)),
    ]))
}

fn ci(n_ambient: u32, degrees: Vec<u32>, sing: &str) -> Result<Output, Failure> {
    let codim = u32::try_from(degrees.len()).unwrap_or(u32::MAX);
    let Some(r) = n_ambient.checked_sub(codim).filter(|&r| r > 0) else {
        return Err(Failure::Domain(format!(
            "{} degrees leave no room in P^{n_ambient}",
            degrees.len()
        )));
    };
    let sings = parse_singularities(sing, r)?;
    let spec = CompleteIntersectionSpec::new(n_ambient, degrees, sings)?;
    Ok(global_fields(&estr_ci(&spec)?))
}

fn dispatch(cmd: Command) -> Result<Output, Failure> {
    Ok(match cmd {
        Command::Local(ty) => local(ty)?,
        Command::Estr { ty, method } => estr(ty, method)?,
        Command::Fermat { ell, dim } => {
            let f = FermatSpec::new(ell, dim)?;
            let e = fermat_e(&f);
            Output::Record(vec![("E", e.to_string(), polynomial_json(&e)), int_field("e", &fermat_euler(&f))])
        }
        Command::Eulerian { kappa, lambda, nu, xi } => {
            if nu == 0 {
                return Err(Failure::Domain("need nu >= 1".into()));
            }
            let closed = eulerian_closed(kappa, lambda, nu, xi);
            if eulerian_recurrence(kappa, lambda, nu, xi) != Rational::from_integer(closed.clone()) {
                return Err(Failure::Domain("recurrence and closed form disagree".into()));
            }
            Output::Record(vec![int_field("S", &closed)])
        }
        Command::Ci { n_ambient, degrees, sing } => ci(n_ambient, degrees, &sing)?,
        Command::Goryunov { n_ambient, kappa } => {
            let e = goryunov_estr(n_ambient, kappa)?;
            Output::Record(vec![
                int_field("nodes", &goryunov_nodes(n_ambient, kappa)),
                rat_field("e_str", &e),
                int_field("ind_str", &ind_str(&e)),
            ])
        }
        Command::SegreKnorrer { n } => {
            let e = segre_knorrer_estr(n)?;
            let local = &e - Rational::from_integer((n - 1).into());
            Output::Record(vec![
                rat_field("e_str", &e),
                rat_field("local_e_str", &local),
                int_field("ind_str", &ind_str(&e)),
            ])
        }
        Command::Arrangement { n_ambient, r, d, t } => {
            global_fields(&arrangement_estr(&ArrangementSpec::new(n_ambient, r, d, t)?)?)
        }
        Command::Table(t) => Output::Table(match t {
            TableCommand::Conjrem { r, n_max } => tables::conjrem(r, n_max)?,
            TableCommand::Solids => tables::solids()?,
            TableCommand::SegreKnorrer => tables::segre_knorrer()?,
            TableCommand::Goryunov { n_ambient } => tables::goryunov(n_ambient)?,
        }),
    })
}

fn render(out: Output, format: Format, style: &Style) -> Result<String, Failure> {
    Ok(match (out, format) {
        (Output::Table(t), Format::Text) => t.to_text(),
        (Output::Table(t), Format::Csv) => t.to_csv(),
        (Output::Table(t), Format::Json) => format!("{}\n", t.to_json()),
        (Output::Record(fields), Format::Text) => {
            let mut s = String::new();
            for (label, text, _) in fields {
                style.line(&mut s, label, text);
            }
            s
        }
        (Output::Record(fields), Format::Json) => {
            let obj: Map<String, Value> = fields.into_iter().map(|(k, _, v)| (k.to_string(), v)).collect();
            format!("{}\n", Value::Object(obj))
        }
        (Output::Record(_), Format::Csv) => {
            return Err(Failure::Usage("csv output is only available for `table` subcommands".into()))
        }
    })
}

/// Runs one invocation, writing to the given streams. Returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut impl Write, stderr: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    let style = Style::from_env();
    match dispatch(cli.command).and_then(|o| render(o, cli.format, &style)) {
        Ok(text) => {
            let _ = stdout.write_all(text.as_bytes());
            EXIT_OK
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_DOMAIN
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("stringy").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn singularity_grammar() {
        let v = parse_singularities("2,3:9; 1,2:18", 3).unwrap();
        assert_eq!(v.len(), 2);
        assert_eq!((v[0].0.n(), v[0].0.ell(), v[0].1), (2, 3, 9));
        assert_eq!((v[1].0.n(), v[1].0.ell(), v[1].1), (1, 2, 18));
        assert_eq!(parse_singularities("4,2", 3).unwrap()[0].1, 1);
        assert!(parse_singularities("", 3).unwrap().is_empty());
        assert!(matches!(parse_singularities("2;3", 3), Err(Failure::Usage(_))));
        assert!(matches!(parse_singularities("2,3:x", 3), Err(Failure::Usage(_))));
        assert!(matches!(parse_singularities("2,5", 3), Err(Failure::Domain(_))));
    }

    #[test]
    fn csv_for_records_is_a_usage_error() {
        let (code, _, err) = call(&["fermat", "--ell", "3", "--dim", "1", "--format", "csv"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("table"));
    }

    #[test]
    fn out_of_family_is_a_domain_error() {
        let (code, out, err) = call(&["estr", "--r", "5", "--n", "5", "--ell", "4"]);
        assert_eq!(code, EXIT_DOMAIN);
        assert!(out.is_empty());
        assert!(err.contains("divides neither"), "{err}");
    }
}
