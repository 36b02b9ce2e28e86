//! Problem instances, schedules, the text file format and the random
//! instance generators.
//!
//! File format (line oriented; `#` and `c` lines are comments):
//!
//! ```text
//! c name example
//! p pmc <n> <m>
//! w <v> <time>      exactly n lines, v in 1..=n, time >= 1
//! e <u> <v>         one per conflict, 1 <= u, v <= n, u != v
//! ```
//!
//! A `c name <id>` comment carries the instance name.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{ConflictGraph, GraphError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum InstanceError {
    #[error("machine count must be at least 2, got {0}")]
    TooFewMachines(usize),
    #[error("expected {expected} processing times, got {got}")]
    TimesLength { expected: usize, got: usize },
    #[error("processing time of job {0} must be a positive integer")]
    NonPositiveTime(usize),
    #[error("density must lie in [0, 1], got {0}")]
    InvalidDensity(f64),
    #[error("invalid processing-time interval [{0}, {1}]")]
    InvalidInterval(u64, u64),
    #[error("bipartite instances need an even job count, got {0}")]
    OddJobCount(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Error, Clone, PartialEq)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ParseErrorKind {
    #[error("expected header `p pmc <n> <m>` before any data")]
    MissingHeader,
    #[error("header appears more than once")]
    DuplicateHeader,
    #[error("malformed line `{0}`")]
    Malformed(String),
    #[error("unknown record type `{0}`")]
    UnknownRecord(String),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("processing time for job {0} given twice")]
    DuplicateWeight(usize),
    #[error("processing time must be at least 1")]
    ZeroTime,
    #[error("self-loop on job {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("missing processing time for job {0}")]
    MissingWeight(usize),
    #[error(transparent)]
    Instance(#[from] InstanceError),
}

/// A scheduling instance: conflict graph, integral processing times and the
/// number of identical machines.
#[derive(Clone, Debug, PartialEq)]
pub struct Instance {
    pub name: String,
    graph: ConflictGraph,
    times: Vec<u64>,
    machines: usize,
}

impl Instance {
    pub fn new(
        name: impl Into<String>,
        graph: ConflictGraph,
        times: Vec<u64>,
        machines: usize,
    ) -> Result<Self, InstanceError> {
        if machines < 2 {
            return Err(InstanceError::TooFewMachines(machines));
        }
        if times.len() != graph.n() {
            return Err(InstanceError::TimesLength {
                expected: graph.n(),
                got: times.len(),
            });
        }
        if let Some(v) = times.iter().position(|&t| t == 0) {
            return Err(InstanceError::NonPositiveTime(v));
        }
        Ok(Self {
            name: name.into(),
            graph,
            times,
            machines,
        })
    }

    #[inline]
    pub fn graph(&self) -> &ConflictGraph {
        &self.graph
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.graph.n()
    }

    #[inline]
    pub fn machines(&self) -> usize {
        self.machines
    }

    #[inline]
    pub fn times(&self) -> &[u64] {
        &self.times
    }

    #[inline]
    pub fn time(&self, v: usize) -> u64 {
        self.times[v]
    }

    pub fn total_time(&self) -> u64 {
        self.times.iter().sum()
    }

    pub fn max_time(&self) -> u64 {
        self.times.iter().copied().max().unwrap_or(0)
    }
}

/// `max(⌈Σp / m⌉, max p)`.
pub fn trivial_lower_bound(inst: &Instance) -> u64 {
    inst.total_time()
        .div_ceil(inst.machines() as u64)
        .max(inst.max_time())
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScheduleError {
    #[error("schedule covers {got} jobs, instance has {expected}")]
    WrongLength { expected: usize, got: usize },
    #[error("job {job} assigned to machine {machine}, only {machines} exist")]
    MachineOutOfRange {
        job: usize,
        machine: usize,
        machines: usize,
    },
    #[error("conflicting jobs {0} and {1} share a machine")]
    Conflict(usize, usize),
    #[error("stored makespan {stored} differs from recomputed {actual}")]
    MakespanMismatch { stored: u64, actual: u64 },
}

/// Machine index (`0..m`) for every job plus the resulting makespan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Schedule {
    pub assignment: Vec<usize>,
    pub makespan: u64,
}

impl Schedule {
    /// Builds a schedule and computes its makespan. Does not check conflicts.
    pub fn from_assignment(inst: &Instance, assignment: Vec<usize>) -> Self {
        let makespan = machine_loads(inst, &assignment).into_iter().max().unwrap_or(0);
        Self {
            assignment,
            makespan,
        }
    }

    pub fn loads(&self, inst: &Instance) -> Vec<u64> {
        machine_loads(inst, &self.assignment)
    }

    pub fn validate(&self, inst: &Instance) -> Result<(), ScheduleError> {
        if self.assignment.len() != inst.n() {
            return Err(ScheduleError::WrongLength {
                expected: inst.n(),
                got: self.assignment.len(),
            });
        }
        let m = inst.machines();
        if let Some((job, &machine)) = self.assignment.iter().enumerate().find(|(_, &k)| k >= m) {
            return Err(ScheduleError::MachineOutOfRange {
                job,
                machine,
                machines: m,
            });
        }
        if let Some((u, v)) = inst
            .graph()
            .edges()
            .find(|&(u, v)| self.assignment[u] == self.assignment[v])
        {
            return Err(ScheduleError::Conflict(u, v));
        }
        let actual = self.loads(inst).into_iter().max().unwrap_or(0);
        if actual != self.makespan {
            return Err(ScheduleError::MakespanMismatch {
                stored: self.makespan,
                actual,
            });
        }
        Ok(())
    }
}

fn machine_loads(inst: &Instance, assignment: &[usize]) -> Vec<u64> {
    let width = assignment.iter().map(|&k| k + 1).max().unwrap_or(0).max(inst.machines());
    let mut loads = vec![0; width];
    for (v, &k) in assignment.iter().enumerate() {
        loads[k] += inst.time(v);
    }
    loads
}

/// Processing-time interval for the random generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TimeInterval {
    /// `[1, 10]`
    A,
    /// `[1, 50]`
    B,
    /// `[1, 100]`
    C,
    Custom(u64, u64),
}

impl TimeInterval {
    pub fn bounds(self) -> (u64, u64) {
        match self {
            TimeInterval::A => (1, 10),
            TimeInterval::B => (1, 50),
            TimeInterval::C => (1, 100),
            TimeInterval::Custom(lo, hi) => (lo, hi),
        }
    }

    fn checked_bounds(self) -> Result<(u64, u64), InstanceError> {
        let (lo, hi) = self.bounds();
        if lo == 0 || lo > hi {
            return Err(InstanceError::InvalidInterval(lo, hi));
        }
        Ok((lo, hi))
    }
}

impl fmt::Display for TimeInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TimeInterval::A => f.write_str("a"),
            TimeInterval::B => f.write_str("b"),
            TimeInterval::C => f.write_str("c"),
            TimeInterval::Custom(lo, hi) => write!(f, "{lo}-{hi}"),
        }
    }
}

impl FromStr for TimeInterval {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "a" | "A" => Ok(TimeInterval::A),
            "b" | "B" => Ok(TimeInterval::B),
            "c" | "C" => Ok(TimeInterval::C),
            _ => {
                let (lo, hi) = s
                    .split_once('-')
                    .ok_or_else(|| format!("interval must be a, b, c or LO-HI, got `{s}`"))?;
                let lo = lo.trim().parse().map_err(|e| format!("bad lower bound: {e}"))?;
                let hi = hi.trim().parse().map_err(|e| format!("bad upper bound: {e}"))?;
                Ok(TimeInterval::Custom(lo, hi))
            }
        }
    }
}

fn check_density(d: f64) -> Result<(), InstanceError> {
    if (0.0..=1.0).contains(&d) {
        Ok(())
    } else {
        Err(InstanceError::InvalidDensity(d))
    }
}

/// `G(n, d)` conflict graph with times drawn uniformly from `interval`.
/// Pairs are visited in lexicographic order, so a seed fixes the instance.
pub fn gen_erdos_renyi(
    n: usize,
    d: f64,
    interval: TimeInterval,
    m: usize,
    seed: u64,
) -> Result<Instance, InstanceError> {
    check_density(d)?;
    let (lo, hi) = interval.checked_bounds()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = ConflictGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < d {
                g.add_edge(u, v)?;
            }
        }
    }
    let times = (0..n).map(|_| rng.gen_range(lo..=hi)).collect();
    Instance::new(format!("gnp_{n}_{d}_{interval}_s{seed}"), g, times, m)
}

/// `B(n, d)`: jobs `0..n/2` form side A (time `time_a`), the rest side B
/// (time `time_b`); each A-B pair conflicts with probability `d`.
pub fn gen_bipartite(
    n: usize,
    d: f64,
    m: usize,
    time_a: u64,
    time_b: u64,
    seed: u64,
) -> Result<Instance, InstanceError> {
    if !n.is_multiple_of(2) {
        return Err(InstanceError::OddJobCount(n));
    }
    check_density(d)?;
    let half = n / 2;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = ConflictGraph::new(n);
    for a in 0..half {
        for b in half..n {
            if rng.gen::<f64>() < d {
                g.add_edge(a, b)?;
            }
        }
    }
    let times = (0..n).map(|v| if v < half { time_a } else { time_b }).collect();
    Instance::new(format!("bip_{n}_{d}_s{seed}"), g, times, m)
}

pub fn write_instance(inst: &Instance) -> String {
    let mut out = String::new();
    if !inst.name.is_empty() {
        let _ = writeln!(out, "c name {}", inst.name);
    }
    let _ = writeln!(out, "p pmc {} {}", inst.n(), inst.machines());
    for (v, t) in inst.times().iter().enumerate() {
        let _ = writeln!(out, "w {} {}", v + 1, t);
    }
    for (u, v) in inst.graph().edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    let mut name = String::new();
    let mut header: Option<(usize, usize)> = None;
    let mut times: Vec<Option<u64>> = Vec::new();
    let mut graph = ConflictGraph::new(0);
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let err = |kind| ParseError {
            line: line_no,
            kind,
        };
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let tag = fields.next().unwrap_or_default();
        if tag == "c" {
            if let Some(("name", rest)) = line[1..].trim().split_once(' ') {
                name = rest.trim().to_string();
            }
            continue;
        }
        let nums: Vec<&str> = fields.collect();
        let malformed = || err(ParseErrorKind::Malformed(line.to_string()));
        let parse_num = |s: &str| s.parse::<usize>().map_err(|_| malformed());

        match tag {
            "p" => {
                if header.is_some() {
                    return Err(err(ParseErrorKind::DuplicateHeader));
                }
                if nums.len() != 3 || nums[0] != "pmc" {
                    return Err(malformed());
                }
                let n = parse_num(nums[1])?;
                let m = parse_num(nums[2])?;
                header = Some((n, m));
                times = vec![None; n];
                graph = ConflictGraph::new(n);
            }
            "w" | "e" => {
                let Some((n, _)) = header else {
                    return Err(err(ParseErrorKind::MissingHeader));
                };
                if nums.len() != 2 {
                    return Err(malformed());
                }
                let a = parse_num(nums[0])?;
                let b = parse_num(nums[1])?;
                if a == 0 || a > n {
                    return Err(err(ParseErrorKind::VertexOutOfRange(a)));
                }
                if tag == "w" {
                    if b == 0 {
                        return Err(err(ParseErrorKind::ZeroTime));
                    }
                    if times[a - 1].replace(b as u64).is_some() {
                        return Err(err(ParseErrorKind::DuplicateWeight(a)));
                    }
                } else {
                    if b == 0 || b > n {
                        return Err(err(ParseErrorKind::VertexOutOfRange(b)));
                    }
                    graph.add_edge(a - 1, b - 1).map_err(|e| {
                        err(match e {
                            GraphError::SelfLoop(v) => ParseErrorKind::SelfLoop(v + 1),
                            GraphError::DuplicateEdge(u, v) => {
                                ParseErrorKind::DuplicateEdge(u + 1, v + 1)
                            }
                            other => ParseErrorKind::Instance(other.into()),
                        })
                    })?;
                }
            }
            other => return Err(err(ParseErrorKind::UnknownRecord(other.to_string()))),
        }
    }

    let Some((_, m)) = header else {
        return Err(ParseError {
            line: last_line,
            kind: ParseErrorKind::MissingHeader,
        });
    };
    let times = times
        .into_iter()
        .enumerate()
        .map(|(v, t)| {
            t.ok_or(ParseError {
                line: last_line,
                kind: ParseErrorKind::MissingWeight(v + 1),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Instance::new(name, graph, times, m).map_err(|e| ParseError {
        line: last_line,
        kind: e.into(),
    })
}
