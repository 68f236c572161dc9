use std::fmt::Write;

use rayon::prelude::*;
use serde_json::json;
use signpart::characters::{char_table, mn_char_smallest_first};
use signpart::signclass::{classify, enumerate_sign_partitions, in_sign_set, is_sign_partition_bruteforce};
use signpart::witness::witness_beta;
use signpart::{mn_char, partitions_of, Error, MemoCache, Partition};

use crate::{Command, Failure, Format};

type Outcome = Result<String, Failure>;

fn json_line(value: &serde_json::Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(value).expect("values serialize"))
}

fn unsupported(format: Format, command: &str) -> Failure {
    Failure {
        code: 2,
        message: format!("--format {format:?} is not available for {command}").to_lowercase(),
        partial: String::new(),
    }
}

pub fn run(command: &Command, format: Option<Format>, cache: &MemoCache) -> Outcome {
    match command {
        Command::Char { lambda, mu } => char_value(lambda, mu, format.unwrap_or(Format::Plain), cache),
        Command::Table { n } => table(*n, format.unwrap_or(Format::Plain), cache),
        Command::Classify { gamma, verify } => {
            classify_one(gamma, *verify, format.unwrap_or(Format::Json), cache)
        }
        Command::Enumerate { n } => enumerate(*n, format.unwrap_or(Format::Plain)),
        Command::Witness { alpha, check } => witness(alpha, *check, format.unwrap_or(Format::Json), cache),
        Command::Verify { max_n } => verify(*max_n, format.unwrap_or(Format::Plain), cache),
    }
}

fn char_value(lambda: &Partition, mu: &Partition, format: Format, cache: &MemoCache) -> Outcome {
    let value = mn_char(lambda, mu, cache)?;
    match format {
        Format::Plain => Ok(format!("{value}\n")),
        Format::Json => Ok(json_line(&json!({ "lambda": lambda, "mu": mu, "value": value }))),
        Format::Csv => Err(unsupported(format, "char")),
    }
}

fn table(n: usize, format: Format, cache: &MemoCache) -> Outcome {
    let t = char_table(n, cache)?;
    Ok(match format {
        Format::Plain => t.to_string(),
        Format::Csv => t.to_csv(),
        Format::Json => json_line(&t.to_json()),
    })
}

fn classify_one(gamma: &Partition, verify: bool, format: Format, cache: &MemoCache) -> Outcome {
    let c = classify(gamma, verify, cache)?;
    match format {
        Format::Json => Ok(json_line(&c.to_json())),
        Format::Plain => {
            let mut out = String::new();
            match (&c.decomposition, &c.violator) {
                (Some(d), _) => write!(out, "{gamma}: sign (s = {}, tail {})", d.s, d.tail),
                (None, Some(v)) => write!(out, "{gamma}: not sign (chi^({}) = {})", v.lambda, v.value),
                (None, None) => write!(out, "{gamma}: not sign"),
            }
            .expect("writing to a string");
            out.push_str(if c.verified { ", verified\n" } else { "\n" });
            Ok(out)
        }
        Format::Csv => Err(unsupported(format, "classify")),
    }
}

fn enumerate(n: usize, format: Format) -> Outcome {
    let list = enumerate_sign_partitions(n);
    match format {
        Format::Plain => Ok(list.iter().map(|p| format!("{p}\n")).collect()),
        Format::Json => Ok(json_line(&json!(list))),
        Format::Csv => Err(unsupported(format, "enumerate")),
    }
}

fn witness(alpha: &Partition, check: bool, format: Format, cache: &MemoCache) -> Outcome {
    let w = witness_beta(alpha, cache)?;
    if check {
        let independent = mn_char_smallest_first(&w.beta, alpha)?;
        if independent != w.computed {
            return Err(Failure {
                code: 4,
                message: format!(
                    "independent evaluation of chi^{}_{alpha} gives {independent}, not {}",
                    w.beta, w.computed
                ),
                partial: String::new(),
            });
        }
    }
    match format {
        Format::Json => Ok(json_line(&w.to_json())),
        Format::Plain => {
            let claimed = w.claimed.map_or("none".to_string(), |c| c.to_string());
            Ok(format!(
                "case {}: beta {}, chi = {} (claimed {claimed}), h21 = {}\n",
                w.case,
                w.beta,
                w.computed,
                w.hook21()
            ))
        }
        Format::Csv => Err(unsupported(format, "witness")),
    }
}

struct VerifyRow {
    n: usize,
    partitions: usize,
    sign: usize,
    disagreements: Vec<Partition>,
}

fn verify(max_n: usize, format: Format, cache: &MemoCache) -> Outcome {
    cache.check_capacity(max_n)?;
    let mut rows = Vec::new();
    for n in 0..=max_n {
        let gammas: Vec<Partition> = partitions_of(n).collect();
        let checked = gammas
            .par_iter()
            .map(|g| Ok((g, in_sign_set(g).is_some(), is_sign_partition_bruteforce(g, cache)?)))
            .collect::<Result<Vec<_>, Error>>()?;
        rows.push(VerifyRow {
            n,
            partitions: gammas.len(),
            sign: checked.iter().filter(|(_, s, _)| *s).count(),
            disagreements: checked
                .into_iter()
                .filter(|(_, s, b)| s != b)
                .map(|(g, _, _)| g.clone())
                .collect(),
        });
    }

    let output = match format {
        Format::Plain => rows
            .iter()
            .map(|r| {
                format!(
                    "n={}: {} partitions, disagreements: {}, sign: {}\n",
                    r.n,
                    r.partitions,
                    r.disagreements.len(),
                    r.sign
                )
            })
            .collect(),
        Format::Json => json_line(&json!(rows
            .iter()
            .map(|r| json!({
                "n": r.n,
                "partitions": r.partitions,
                "sign": r.sign,
                "disagreements": r.disagreements,
            }))
            .collect::<Vec<_>>())),
        Format::Csv => return Err(unsupported(format, "verify")),
    };

    let bad: Vec<String> = rows
        .iter()
        .flat_map(|r| r.disagreements.iter().map(|g| g.to_string()))
        .collect();
    if bad.is_empty() {
        Ok(output)
    } else {
        Err(Failure {
            code: 4,
            message: format!("sign-set test disagrees with brute force on {}", bad.join(" ")),
            partial: output,
        })
    }
}
