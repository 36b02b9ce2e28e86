//! Primal heuristics: DSATUR coloring, greedy list scheduling and a
//! move/swap local search.

use std::time::{Duration, Instant};

use crate::graph::{find_k_coloring, ColorSearch, ConflictGraph};
use crate::instance::{Instance, Schedule};

/// Node budget of the exact coloring attempt made when greedy placement
/// fails.
const COLORING_NODES: u64 = 50_000;

/// Proper coloring with colors `0..k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    pub color: Vec<usize>,
    pub k: usize,
}

impl Coloring {
    pub fn from_colors(color: Vec<usize>) -> Self {
        let k = color.iter().map(|&c| c + 1).max().unwrap_or(0);
        Self { color, k }
    }

    pub fn is_proper(&self, g: &ConflictGraph) -> bool {
        g.edges().all(|(u, v)| self.color[u] != self.color[v])
    }
}

/// DSATUR: repeatedly color the vertex with the most distinct neighbor
/// colors (ties: larger degree, then smaller label) with the smallest free
/// color.
pub fn dsatur(g: &ConflictGraph) -> Coloring {
    let n = g.n();
    let mut color = vec![usize::MAX; n];
    let mut seen: Vec<Vec<bool>> = vec![Vec::new(); n];
    let mut saturation = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v] == usize::MAX)
            .max_by_key(|&v| (saturation[v], g.degree(v), std::cmp::Reverse(v)))
            .expect("uncolored vertex");
        let c = (0..).find(|&c| !seen[v].get(c).copied().unwrap_or(false)).unwrap();
        color[v] = c;
        for &w in g.neighbors(v) {
            if seen[w].len() <= c {
                seen[w].resize(c + 1, false);
            }
            if !seen[w][c] {
                seen[w][c] = true;
                saturation[w] += 1;
            }
        }
    }
    Coloring::from_colors(color)
}

/// Jobs by non-increasing time, each onto the least-loaded machine holding
/// none of its conflicts.
fn greedy(inst: &Instance) -> Option<Schedule> {
    let g = inst.graph();
    let m = inst.machines();
    let mut jobs: Vec<usize> = (0..inst.n()).collect();
    jobs.sort_by_key(|&v| (std::cmp::Reverse(inst.time(v)), std::cmp::Reverse(g.degree(v)), v));
    let mut machine = vec![usize::MAX; inst.n()];
    let mut loads = vec![0u64; m];
    for v in jobs {
        let k = (0..m)
            .filter(|&k| g.neighbors(v).iter().all(|&u| machine[u] != k))
            .min_by_key(|&k| (loads[k], k))?;
        machine[v] = k;
        loads[k] += inst.time(v);
    }
    Some(Schedule::from_assignment(inst, machine))
}

/// Greedy list schedule; with a coloring of at most `m` colors the
/// color-class schedule is also built and the better one returned. `None`
/// means the heuristic failed, not that the instance is infeasible.
pub fn list_schedule(inst: &Instance, coloring: Option<&Coloring>) -> Option<Schedule> {
    let mut best = greedy(inst);
    if let Some(c) = coloring.filter(|c| c.k <= inst.machines()) {
        let classes = Schedule::from_assignment(inst, c.color.clone());
        if best.as_ref().is_none_or(|b| classes.makespan < b.makespan) {
            best = Some(classes);
        }
    }
    best
}

struct Search<'a> {
    inst: &'a Instance,
    machine: Vec<usize>,
    loads: Vec<u64>,
    /// `clash[v * m + k]`: conflicts of `v` currently on machine `k`.
    clash: Vec<u32>,
}

impl<'a> Search<'a> {
    fn new(inst: &'a Instance, start: &Schedule) -> Self {
        let m = inst.machines();
        let mut clash = vec![0; inst.n() * m];
        for (u, v) in inst.graph().edges() {
            clash[u * m + start.assignment[v]] += 1;
            clash[v * m + start.assignment[u]] += 1;
        }
        Self {
            inst,
            machine: start.assignment.clone(),
            loads: start.loads(inst),
            clash,
        }
    }

    fn relocate(&mut self, v: usize, to: usize) {
        let m = self.inst.machines();
        let from = self.machine[v];
        let p = self.inst.time(v);
        self.loads[from] -= p;
        self.loads[to] += p;
        self.machine[v] = to;
        for &u in self.inst.graph().neighbors(v) {
            self.clash[u * m + from] -= 1;
            self.clash[u * m + to] += 1;
        }
    }

    fn fits(&self, v: usize, k: usize, ignoring: Option<usize>) -> bool {
        let m = self.inst.machines();
        let mut c = self.clash[v * m + k];
        if let Some(w) = ignoring {
            if self.inst.graph().has_edge(v, w) {
                c -= 1;
            }
        }
        c == 0
    }

    /// One first-improvement step on (makespan, number of critical
    /// machines).
    fn improve(&mut self) -> bool {
        let inst = self.inst;
        let m = inst.machines();
        let top = *self.loads.iter().max().unwrap();
        for a in (0..m).filter(|&a| self.loads[a] == top) {
            let on_a: Vec<usize> = (0..inst.n()).filter(|&v| self.machine[v] == a).collect();
            for &v in &on_a {
                let p = inst.time(v);
                if let Some(b) = (0..m).find(|&b| b != a && self.loads[b] + p < top && self.fits(v, b, None)) {
                    self.relocate(v, b);
                    return true;
                }
            }
            for &v in &on_a {
                let p = inst.time(v);
                for w in 0..inst.n() {
                    let b = self.machine[w];
                    let q = inst.time(w);
                    if b == a || q >= p || self.loads[b] + p - q >= top {
                        continue;
                    }
                    if self.fits(v, b, Some(w)) && self.fits(w, a, Some(v)) {
                        self.relocate(v, b);
                        self.relocate(w, a);
                        return true;
                    }
                }
            }
        }
        false
    }
}

/// Move/swap descent from `start`, never worsening the makespan. Stops at a
/// local optimum or when `budget` is spent.
pub fn local_search(inst: &Instance, start: &Schedule, budget: Duration) -> Schedule {
    if budget.is_zero() || inst.n() == 0 {
        return start.clone();
    }
    let deadline = Instant::now() + budget;
    let mut s = Search::new(inst, start);
    while Instant::now() < deadline && s.improve() {}
    let out = Schedule::from_assignment(inst, s.machine);
    debug_assert!(out.makespan <= start.makespan);
    out
}

/// DSATUR, list scheduling (falling back to a budgeted exact `m`-coloring
/// when greedy placement fails), then local search within `budget`.
pub fn warm_start(inst: &Instance, budget: Duration) -> Option<Schedule> {
    let started = Instant::now();
    let coloring = dsatur(inst.graph());
    let mut start = list_schedule(inst, Some(&coloring));
    if start.is_none() {
        if let ColorSearch::Found(colors) = find_k_coloring(inst.graph(), inst.machines(), COLORING_NODES) {
            start = list_schedule(inst, Some(&Coloring::from_colors(colors)));
        }
    }
    let start = start?;
    let left = budget.saturating_sub(started.elapsed());
    Some(local_search(inst, &start, left))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::exact_chromatic_number;

    fn inst(g: ConflictGraph, times: Vec<u64>, m: usize) -> Instance {
        Instance::new("t", g, times, m).unwrap()
    }

    #[test]
    fn dsatur_examples() {
        assert_eq!(dsatur(&ConflictGraph::complete(4)).k, 4);
        assert_eq!(dsatur(&ConflictGraph::new(3)).k, 1);
        let c6 = ConflictGraph::cycle(6);
        let c = dsatur(&c6);
        assert_eq!(c.k, 2);
        assert!(c.is_proper(&c6));
        assert_eq!(exact_chromatic_number(&c6, 20).unwrap(), 2);
    }

    #[test]
    fn list_schedule_examples() {
        let k3 = inst(ConflictGraph::complete(3), vec![1, 2, 3], 3);
        assert_eq!(list_schedule(&k3, None).unwrap().makespan, 3);
        let k3 = inst(ConflictGraph::complete(3), vec![1, 2, 3], 2);
        assert!(list_schedule(&k3, None).is_none());
        let e = inst(ConflictGraph::new(4), vec![4, 3, 3, 2], 2);
        assert_eq!(list_schedule(&e, None).unwrap().makespan, 6);
    }

    #[test]
    fn coloring_classes_rescue_greedy() {
        // greedy puts the two heavy jobs 0 and 3 apart and then strands 2
        let g = ConflictGraph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let i = inst(g, vec![5, 1, 1, 5], 2);
        let c = Coloring::from_colors(vec![0, 1, 0, 1]);
        let s = list_schedule(&i, Some(&c)).unwrap();
        s.validate(&i).unwrap();
    }

    #[test]
    fn local_search_examples() {
        let i = inst(ConflictGraph::new(4), vec![5, 1, 1, 1], 2);
        let start = Schedule::from_assignment(&i, vec![0, 0, 1, 1]);
        assert_eq!(start.makespan, 6);
        let better = local_search(&i, &start, Duration::from_secs(1));
        assert_eq!(better.makespan, 5);
        better.validate(&i).unwrap();
        assert_eq!(local_search(&i, &start, Duration::ZERO), start);
    }

    #[test]
    fn swaps_respect_conflicts() {
        let g = ConflictGraph::from_edges(4, [(0, 3)]).unwrap();
        let i = inst(g, vec![4, 3, 2, 1], 2);
        let start = Schedule::from_assignment(&i, vec![0, 0, 1, 1]);
        let s = local_search(&i, &start, Duration::from_secs(1));
        s.validate(&i).unwrap();
        // 0 and 3 must be split, so the best is 6
        assert_eq!(s.makespan, 6);
    }

    #[test]
    fn warm_start_examples() {
        let k5 = inst(ConflictGraph::complete(5), vec![1; 5], 4);
        assert!(warm_start(&k5, Duration::from_secs(1)).is_none());
        let wide = inst(ConflictGraph::path(4), vec![3, 1, 4, 2], 5);
        assert_eq!(warm_start(&wide, Duration::from_secs(1)).unwrap().makespan, 4);
    }
}
