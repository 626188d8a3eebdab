//! Command line front end. Every command writes one canonical JSON document
//! (keys sorted) or a plain-text rendering of it.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, ValueEnum};
use num_bigint::{BigInt, BigUint};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{json, Value};

use crate::arrangement::{
    build_event_arrangement, chromatic_polynomial, f_bound, factorial, intersection_poset, is_generic,
    region_count,
};
use crate::classical::{bisector_arrangement, is_generic_points, observed_orders_with_cap, PointSet};
use crate::error::{Error, ErrorKind, Result};
use crate::exactmath::IntPolynomial;
use crate::ordering::{feasible_orders_with_cap, graph_order_bound, monte_carlo_orders, DEFAULT_CAP};
use crate::relativity::{causal_poset, separation_graph, EventSet};
use crate::sweep::{lambda_arrangement, ranking_arrangement, sweep_report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Pairwise separation matrix.
    Classify,
    /// Separation graph and causal relations.
    Graph,
    /// Intersection poset of the simultaneity arrangement.
    Poset,
    /// Number of observable orders.
    Count,
    /// Observable orders with witness velocities.
    Enumerate,
    /// Order count against the general and graph bounds.
    Bounds,
    /// Genericity test for all-spacelike events.
    Generic,
    /// Characteristic polynomial and region count.
    Charpoly,
    /// Chromatic polynomial of the separation graph.
    Chromatic,
    /// Critical velocities, order sequence and reduced word (one space dimension).
    Sweep,
    /// Arrangement of coinciding critical velocities for the event times.
    Ranking,
    /// Orders of simultaneous flashes seen from points of space (point file).
    Classical,
    /// Monte Carlo sample of observable orders.
    Mc,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "minkowski-order", version, about = "Orders of events seen by inertial observers")]
pub struct RunConfig {
    pub command: Command,
    /// Event file, or point file for `classical`.
    pub input: PathBuf,
    /// Allow velocities of any magnitude.
    #[arg(long)]
    pub no_ball: bool,
    /// Monte Carlo samples.
    #[arg(long, default_value_t = 10_000)]
    pub samples: usize,
    /// Monte Carlo seed.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Largest number of events whose permutations are enumerated.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    pub cap: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

/// Exit status and the text destined for standard output and standard error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn exit_code(kind: ErrorKind) -> i32 {
    match kind {
        ErrorKind::Input => 1,
        ErrorKind::Precondition => 2,
        ErrorKind::Invariant => 3,
    }
}

/// Parses `args` (including the program name) and runs one command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    run_config(&config)
}

pub fn run_config(config: &RunConfig) -> Outcome {
    match execute(config) {
        Ok(value) => Outcome { code: 0, stdout: render(&value, config.format), stderr: String::new() },
        Err(e) => Outcome {
            code: exit_code(e.kind()),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn read_json<T: DeserializeOwned>(path: &Path, what: &'static str) -> Result<T> {
    let text = fs::read_to_string(path).map_err(|e| Error::Parse { what, detail: format!("{}: {e}", path.display()) })?;
    serde_json::from_str(&text).map_err(|e| Error::Parse { what, detail: e.to_string() })
}

fn to_value<T: Serialize>(v: &T) -> Result<Value> {
    serde_json::to_value(v).map_err(|e| Error::Invariant(format!("serialization failed: {e}")))
}

fn big(n: &BigUint) -> Value {
    crate::exactmath::big_to_json(&BigInt::from(n.clone()))
}

fn polynomial(p: &IntPolynomial) -> Result<Value> {
    Ok(json!({ "coefficients": to_value(p)?, "text": p.to_string() }))
}

fn execute(config: &RunConfig) -> Result<Value> {
    if config.command == Command::Classical {
        let points: PointSet = read_json(&config.input, "point file")?;
        let orders = observed_orders_with_cap(&points, config.cap)?;
        let regions = region_count(&bisector_arrangement(&points)?)?;
        if BigUint::from(orders.len()) != regions {
            return Err(Error::Invariant(format!("{} orders but {regions} regions", orders.len())));
        }
        return Ok(json!({
            "f_bound": big(&f_bound(points.dim(), points.len())),
            "generic": to_value(&is_generic_points(&points)?)?,
            "orders": to_value(&orders)?,
            "regions": big(&regions),
        }));
    }

    let events: EventSet = read_json(&config.input, "event file")?;
    let ball = !config.no_ball;
    Ok(match config.command {
        Command::Classify => json!({
            "k": events.len(),
            "n": events.dim(),
            "separation": to_value(&events.separation_matrix())?,
        }),
        Command::Graph => {
            let graph = separation_graph(&events)?;
            let poset = causal_poset(&events)?;
            let relations: Vec<[usize; 2]> = poset.relations().iter().map(|&(i, j)| [i + 1, j + 1]).collect();
            json!({
                "causal_relations": relations,
                "incomparability_matches": poset.incomparability_graph() == graph,
                "separation_graph": to_value(&graph)?,
            })
        }
        Command::Poset => {
            let arrangement = build_event_arrangement(&events, &separation_graph(&events)?)?;
            let labels: Vec<Vec<String>> = arrangement
                .hyperplanes()
                .iter()
                .map(|h| h.labels().iter().map(ToString::to_string).collect())
                .collect();
            json!({ "hyperplanes": labels, "poset": to_value(&intersection_poset(&arrangement)?)? })
        }
        Command::Count => json!({ "count": feasible_orders_with_cap(&events, ball, config.cap)?.len() }),
        Command::Enumerate => to_value(&feasible_orders_with_cap(&events, ball, config.cap)?)?,
        Command::Bounds => {
            let (n, k) = (events.dim(), events.len());
            json!({
                "count": feasible_orders_with_cap(&events, ball, config.cap)?.len(),
                "f_bound": big(&f_bound(n, k)),
                "factorial": big(&factorial(k)),
                "graph_bound": big(&graph_order_bound(&separation_graph(&events)?, n)?),
            })
        }
        Command::Generic => to_value(&is_generic(&events)?)?,
        Command::Charpoly => {
            let arrangement = build_event_arrangement(&events, &separation_graph(&events)?)?;
            let poset = intersection_poset(&arrangement)?;
            let mut v = polynomial(&poset.characteristic_polynomial())?;
            v["regions"] = big(&region_count(&arrangement)?);
            v
        }
        Command::Chromatic => {
            let graph = separation_graph(&events)?;
            let mut v = polynomial(&chromatic_polynomial(&graph))?;
            v["graph"] = to_value(&graph)?;
            v
        }
        Command::Sweep => to_value(&sweep_report(&events)?)?,
        Command::Ranking => {
            let arrangement = ranking_arrangement(&events.times())?;
            let labels: Vec<Vec<String>> = arrangement
                .hyperplanes()
                .iter()
                .map(|h| h.labels().iter().map(ToString::to_string).collect())
                .collect();
            let sequences = region_count(&lambda_arrangement(&events.times())?)?;
            json!({
                "distinct_hyperplanes": arrangement.len(),
                "hyperplanes": labels,
                "pair_pairs": labels.iter().map(Vec::len).sum::<usize>(),
                "regions": big(&region_count(&arrangement)?),
                "sequences": big(&sequences),
            })
        }
        Command::Mc => {
            let mut v = to_value(&monte_carlo_orders(&events, config.samples, config.seed)?)?;
            v["samples"] = json!(config.samples);
            v["seed"] = json!(config.seed);
            v
        }
        Command::Classical => unreachable!(),
    })
}

fn render(value: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("values always serialize");
            s.push('\n');
            s
        }
        Format::Text => match value {
            Value::Object(map) => map
                .iter()
                .map(|(k, v)| match v {
                    Value::String(s) => format!("{k}: {s}\n"),
                    other => format!("{k}: {other}\n"),
                })
                .collect(),
            other => format!("{other}\n"),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_flags() {
        let c = RunConfig::try_parse_from(["m", "count", "e.json", "--no-ball", "--cap", "5"]).unwrap();
        assert_eq!(c.command, Command::Count);
        assert!(c.no_ball);
        assert_eq!(c.cap, 5);
        assert_eq!(c.format, Format::Json);
        assert!(RunConfig::try_parse_from(["m", "count", "e.json", "--bogus"]).is_err());
        assert!(RunConfig::try_parse_from(["m", "frobnicate", "e.json"]).is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run(["m", "--help"]).code, 0);
        assert_eq!(run(["m", "count"]).code, 1);
        assert_eq!(run(["m", "count", "/nonexistent/file.json"]).code, 1);
    }

    #[test]
    fn text_rendering() {
        let v = json!({"count": 7, "name": "x"});
        assert_eq!(render(&v, Format::Text), "count: 7\nname: x\n");
    }
}
