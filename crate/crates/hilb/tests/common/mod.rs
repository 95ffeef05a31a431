#![allow(dead_code)]

use std::collections::BTreeMap;

use serde_json::Value;

pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run(args: &[&str]) -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = hilb::run(std::iter::once("hilb").chain(args.iter().copied()), &mut out, &mut err);
    Outcome { code, stdout: String::from_utf8(out).unwrap(), stderr: String::from_utf8(err).unwrap() }
}

/// Runs a command with `--format json` and returns the parsed record.
pub fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let o = run(&full);
    assert_eq!(o.code, 0, "{args:?} failed: {}", o.stderr);
    serde_json::from_str(&o.stdout).unwrap()
}

pub type Row = BTreeMap<String, Value>;

/// Rows of the named payload section, keyed by column.
pub fn section(record: &Value, name: &str) -> Vec<Row> {
    let s = record["payload"]["sections"]
        .as_array()
        .unwrap()
        .iter()
        .find(|s| s["name"] == name)
        .unwrap_or_else(|| panic!("no section {name}"));
    let columns: Vec<String> = s["columns"].as_array().unwrap().iter().map(|c| c.as_str().unwrap().to_string()).collect();
    s["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| columns.iter().cloned().zip(r.as_array().unwrap().iter().cloned()).collect())
        .collect()
}

/// Integer cell; large values are serialized as decimal strings.
pub fn int(v: &Value) -> i128 {
    match v {
        Value::Number(n) => n.as_i64().unwrap() as i128,
        Value::String(s) => s.parse().unwrap(),
        other => panic!("not an integer: {other}"),
    }
}

pub fn text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Partition numbers from Euler's pentagonal recurrence.
pub fn partition_numbers(max: usize) -> Vec<u128> {
    let mut p = vec![0i128; max + 1];
    p[0] = 1;
    for n in 1..=max {
        let mut k = 1;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > n {
                break;
            }
            let g2 = k * (3 * k + 1) / 2;
            let sign = if k % 2 == 1 { 1 } else { -1 };
            p[n] += sign * p[n - g1];
            if g2 <= n {
                p[n] += sign * p[n - g2];
            }
            k += 1;
        }
    }
    p.into_iter().map(|x| x as u128).collect()
}

/// All partitions of `n` as weakly decreasing part lists, by recursion on the largest part.
pub fn brute_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, cap: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=n.min(cap)).rev() {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn inside(parts: &[usize], row: usize, col: usize) -> bool {
    parts.get(row).is_some_and(|&p| col < p)
}

/// Minimal generators of the staircase ideal: monomials x^c y^r outside the
/// diagram whose left and lower neighbours are both inside (or off the axes).
pub fn brute_generators(parts: &[usize]) -> usize {
    let rows = parts.len();
    let cols = parts.first().copied().unwrap_or(0);
    let mut count = 0;
    for r in 0..=rows {
        for c in 0..=cols {
            if inside(parts, r, c) {
                continue;
            }
            let left = c == 0 || inside(parts, r, c - 1);
            let below = r == 0 || inside(parts, r - 1, c);
            if left && below {
                count += 1;
            }
        }
    }
    count
}

/// Socle dimension: boxes with neither a right nor an upper neighbour.
pub fn brute_socle(parts: &[usize]) -> usize {
    let mut count = 0;
    for (r, &p) in parts.iter().enumerate() {
        for c in 0..p {
            if !inside(parts, r, c + 1) && !inside(parts, r + 1, c) {
                count += 1;
            }
        }
    }
    count
}

/// Places where a single box may be added.
pub fn brute_addable(parts: &[usize]) -> usize {
    (0..=parts.len())
        .filter(|&r| {
            let here = parts.get(r).copied().unwrap_or(0);
            r == 0 || parts[r - 1] > here
        })
        .count()
}

/// Partitions of `n + 1` containing `parts`.
pub fn brute_covers(parts: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for r in 0..=parts.len() {
        let mut q = parts.to_vec();
        if r == q.len() {
            q.push(0);
        }
        q[r] += 1;
        if r == 0 || q[r - 1] >= q[r] {
            out.push(q);
        }
    }
    out
}
