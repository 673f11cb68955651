//! Text formats: complexes, PACE graphs and tree decompositions, and
//! axiom-set instances.

use std::fmt::Write as _;

use morsetw_core::reductions::{MasInstance, ReductionError, Relation};
use morsetw_core::{ComplexError, Graph, GraphError, SimplicialComplex, TreeDecomposition};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Instance(#[from] ReductionError),
}

fn err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Parse { line, message: message.into() }
}

/// Non-empty lines with their 1-based numbers, after dropping everything
/// from `comment` onwards.
fn content_lines<'a>(text: &'a str, comment: &'a str) -> impl Iterator<Item = (usize, &'a str)> + 'a {
    text.lines().enumerate().filter_map(move |(i, l)| {
        let l = l.split(comment).next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

/// PACE lines: `c` lines are comments.
fn pace_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !(l.starts_with('c') && (l.len() == 1 || l.as_bytes()[1] == b' ')))
}

fn numbers<T: std::str::FromStr>(line: usize, fields: &[&str]) -> Result<Vec<T>, FormatError> {
    fields.iter().map(|f| f.parse().map_err(|_| err(line, format!("`{f}` is not a non-negative integer")))).collect()
}

/// One maximal face per line as 3 or 4 vertex ids; `#` starts a comment.
pub fn parse_complex(text: &str) -> Result<SimplicialComplex, FormatError> {
    let mut faces: Vec<Vec<u32>> = Vec::new();
    let mut seen = std::collections::HashMap::new();
    let mut arity = None;
    for (line, l) in content_lines(text, "#") {
        let fields: Vec<&str> = l.split_whitespace().collect();
        if !(3..=4).contains(&fields.len()) {
            return Err(err(line, format!("expected 3 or 4 vertices, found {}", fields.len())));
        }
        match arity {
            None => arity = Some((fields.len(), line)),
            Some((a, first)) if a != fields.len() => {
                return Err(err(
                    line,
                    format!("mixed dimensions: {} vertices here, {a} on line {first}", fields.len()),
                ))
            }
            _ => {}
        }
        let face: Vec<u32> = numbers(line, &fields)?;
        if face.iter().enumerate().any(|(i, v)| face[..i].contains(v)) {
            return Err(err(line, "repeated vertex"));
        }
        let mut key = face.clone();
        key.sort_unstable();
        if let Some(first) = seen.insert(key, line) {
            return Err(err(line, format!("face already given on line {first}")));
        }
        faces.push(face);
    }
    Ok(SimplicialComplex::new(faces)?)
}

/// Maximal faces one per line, in the complex's canonical order.
pub fn write_complex(complex: &SimplicialComplex) -> String {
    let mut out = String::new();
    for f in complex.maximal_faces() {
        let v: Vec<String> = f.vertices().iter().map(u32::to_string).collect();
        writeln!(out, "{}", v.join(" ")).unwrap();
    }
    out
}

/// PACE `.gr`: `p tw <n> <m>` then one `<u> <v>` line per arc, 1-based.
pub fn parse_graph_pace(text: &str) -> Result<Graph, FormatError> {
    let mut lines = pace_lines(text);
    let (line, header) = lines.next().ok_or_else(|| err(1, "missing `p tw` header"))?;
    let h: Vec<&str> = header.split_whitespace().collect();
    if h.len() != 4 || h[0] != "p" || h[1] != "tw" {
        return Err(err(line, "expected `p tw <nodes> <arcs>`"));
    }
    let [n, m]: [usize; 2] = numbers(line, &h[2..])?.try_into().unwrap();
    let mut arcs = Vec::with_capacity(m);
    for (line, l) in lines {
        let f: Vec<&str> = l.split_whitespace().collect();
        if f.len() != 2 {
            return Err(err(line, "expected `<u> <v>`"));
        }
        let [u, v]: [usize; 2] = numbers(line, &f)?.try_into().unwrap();
        if u == 0 || v == 0 || u > n || v > n {
            return Err(err(line, format!("node out of range 1..={n}")));
        }
        arcs.push((u - 1, v - 1));
    }
    if arcs.len() != m {
        return Err(err(line, format!("header announces {m} arcs, found {}", arcs.len())));
    }
    Ok(Graph::new(n, arcs)?)
}

pub fn write_graph_pace(graph: &Graph) -> String {
    let mut out = format!("p tw {} {}\n", graph.node_count(), graph.arc_count());
    for &(u, v) in graph.arcs() {
        writeln!(out, "{} {}", u + 1, v + 1).unwrap();
    }
    out
}

/// A parsed PACE `.td` file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaceDecomposition {
    pub decomposition: TreeDecomposition,
    /// Node count from the header.
    pub node_count: usize,
}

/// PACE `.td`: `s td <bags> <width+1> <n>`, `b <id> <v…>` lines, then
/// bag-tree arcs; all ids 1-based.
pub fn parse_td_pace(text: &str) -> Result<PaceDecomposition, FormatError> {
    let mut lines = pace_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| err(1, "missing `s td` header"))?;
    let h: Vec<&str> = header.split_whitespace().collect();
    if h.len() != 5 || h[0] != "s" || h[1] != "td" {
        return Err(err(hline, "expected `s td <bags> <width+1> <nodes>`"));
    }
    let [nb, max_bag, n]: [usize; 3] = numbers(hline, &h[2..])?.try_into().unwrap();
    let mut bags: Vec<Option<Vec<usize>>> = vec![None; nb];
    let mut arcs = Vec::new();
    for (line, l) in lines {
        let f: Vec<&str> = l.split_whitespace().collect();
        if f[0] == "b" {
            if f.len() < 2 {
                return Err(err(line, "expected `b <id> <nodes…>`"));
            }
            let vals: Vec<usize> = numbers(line, &f[1..])?;
            let id = vals[0];
            if id == 0 || id > nb {
                return Err(err(line, format!("bag id out of range 1..={nb}")));
            }
            if bags[id - 1].is_some() {
                return Err(err(line, format!("bag {id} given twice")));
            }
            if let Some(&v) = vals[1..].iter().find(|&&v| v == 0 || v > n) {
                return Err(err(line, format!("node {v} out of range 1..={n}")));
            }
            bags[id - 1] = Some(vals[1..].iter().map(|v| v - 1).collect());
        } else {
            if f.len() != 2 {
                return Err(err(line, "expected `b …` or `<bag> <bag>`"));
            }
            let [a, b]: [usize; 2] = numbers(line, &f)?.try_into().unwrap();
            if a == 0 || b == 0 || a > nb || b > nb {
                return Err(err(line, format!("bag id out of range 1..={nb}")));
            }
            arcs.push((a - 1, b - 1));
        }
    }
    let bags: Vec<Vec<usize>> = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| err(hline, format!("bag {} missing", i + 1))))
        .collect::<Result<_, _>>()?;
    let largest = bags.iter().map(Vec::len).max().unwrap_or(0);
    if largest != max_bag {
        return Err(err(hline, format!("header announces largest bag {max_bag}, found {largest}")));
    }
    Ok(PaceDecomposition { decomposition: TreeDecomposition::new(bags, arcs), node_count: n })
}

pub fn write_td_pace(td: &TreeDecomposition, node_count: usize) -> String {
    let largest = td.bags().iter().map(Vec::len).max().unwrap_or(0);
    let mut out = format!("s td {} {} {}\n", td.bag_count(), largest, node_count);
    for (i, bag) in td.bags().iter().enumerate() {
        write!(out, "b {}", i + 1).unwrap();
        for v in bag {
            write!(out, " {}", v + 1).unwrap();
        }
        out.push('\n');
    }
    for &(a, b) in td.arcs() {
        writeln!(out, "{} {}", a + 1, b + 1).unwrap();
    }
    out
}

/// Axiom-set instances: `s <name>` declares a sentence, `r <s> <u…>` the
/// relation `{u…} => s`, and an optional `k <n>` the target size.
pub fn parse_mas(text: &str) -> Result<MasInstance, FormatError> {
    let mut names: Vec<String> = Vec::new();
    let mut pending: Vec<(usize, Vec<String>)> = Vec::new();
    let mut k = None;
    for (line, l) in content_lines(text, "#") {
        let f: Vec<&str> = l.split_whitespace().collect();
        match (f[0], f.len()) {
            ("s", 2) => {
                if names.iter().any(|n| n == f[1]) {
                    return Err(err(line, format!("sentence `{}` declared twice", f[1])));
                }
                names.push(f[1].to_string());
            }
            ("r", len) if len >= 2 => pending.push((line, f[1..].iter().map(|s| s.to_string()).collect())),
            ("k", 2) => k = Some(numbers::<usize>(line, &f[1..])?[0]),
            _ => return Err(err(line, "expected `s <name>`, `r <conclusion> <premises…>` or `k <n>`")),
        }
    }
    let mut relations = Vec::with_capacity(pending.len());
    for (line, ids) in pending {
        let idx = |s: &String| {
            names.iter().position(|n| n == s).ok_or_else(|| err(line, format!("undeclared sentence `{s}`")))
        };
        let conclusion = idx(&ids[0])?;
        let premises = ids[1..].iter().map(idx).collect::<Result<Vec<_>, _>>()?;
        relations.push(Relation::new(premises, conclusion));
    }
    let mut inst = MasInstance::new(names, relations)?;
    inst.k = k;
    Ok(inst)
}

pub fn write_mas(instance: &MasInstance) -> String {
    let names = instance.names();
    let mut out = String::new();
    for n in names {
        writeln!(out, "s {n}").unwrap();
    }
    for r in instance.relations() {
        write!(out, "r {}", names[r.conclusion]).unwrap();
        for &p in &r.premises {
            write!(out, " {}", names[p]).unwrap();
        }
        out.push('\n');
    }
    if let Some(k) = instance.k {
        writeln!(out, "k {k}").unwrap();
    }
    out
}
