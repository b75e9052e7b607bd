//! V-path dynamics: successor graphs, closed orbits, the chain recurrent
//! set, twisted-orbit detection, and V-path reachability and counting.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use serde::Serialize;

use crate::complex::{CellId, ComplexMode};
use crate::config::Config;
use crate::error::{Error, Result};
use crate::field::{Role, VectorField};

/// Directed graph on the p-cells: an edge a -> b exists when V(a) is defined
/// and b is a face of V(a) other than a. Rest and head cells have
/// out-degree zero.
#[derive(Debug, Clone)]
pub struct SuccessorGraph {
    pub index: usize,
    /// Canonical cell indices of the p-cells, ascending.
    pub cells: Vec<usize>,
    /// Local adjacency, parallel to `cells`.
    pub succ: Vec<Vec<usize>>,
    local: HashMap<usize, usize>,
}

impl SuccessorGraph {
    pub fn local_of(&self, cell_ix: usize) -> Option<usize> {
        self.local.get(&cell_ix).copied()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Forward closure of a set of local nodes, the seeds included.
    pub fn reachable(&self, seeds: &[usize]) -> Vec<bool> {
        let mut seen = vec![false; self.len()];
        let mut stack: Vec<usize> = seeds.to_vec();
        for &s in seeds {
            seen[s] = true;
        }
        while let Some(n) = stack.pop() {
            for &m in &self.succ[n] {
                if !seen[m] {
                    seen[m] = true;
                    stack.push(m);
                }
            }
        }
        seen
    }

    /// Backward closure of a set of local nodes, the seeds included.
    pub fn coreachable(&self, seeds: &[usize]) -> Vec<bool> {
        let mut pred: Vec<Vec<usize>> = vec![Vec::new(); self.len()];
        for (n, outs) in self.succ.iter().enumerate() {
            for &m in outs {
                pred[m].push(n);
            }
        }
        let mut seen = vec![false; self.len()];
        let mut stack: Vec<usize> = seeds.to_vec();
        for &s in seeds {
            seen[s] = true;
        }
        while let Some(n) = stack.pop() {
            for &m in &pred[n] {
                if !seen[m] {
                    seen[m] = true;
                    stack.push(m);
                }
            }
        }
        seen
    }

    pub fn has_cycle(&self) -> bool {
        // Iterative three-color DFS.
        #[derive(Clone, Copy, PartialEq)]
        enum Color {
            White,
            Gray,
            Black,
        }
        let mut color = vec![Color::White; self.len()];
        for start in 0..self.len() {
            if color[start] != Color::White {
                continue;
            }
            let mut stack = vec![(start, 0usize)];
            color[start] = Color::Gray;
            while let Some(&mut (n, ref mut next)) = stack.last_mut() {
                if *next < self.succ[n].len() {
                    let m = self.succ[n][*next];
                    *next += 1;
                    match color[m] {
                        Color::Gray => return true,
                        Color::White => {
                            color[m] = Color::Gray;
                            stack.push((m, 0));
                        }
                        Color::Black => {}
                    }
                } else {
                    color[n] = Color::Black;
                    stack.pop();
                }
            }
        }
        false
    }
}

/// Build the successor graph for the p-cells of a field.
pub fn successor_graph(field: &VectorField, p: usize) -> SuccessorGraph {
    let cx = field.complex();
    let cells = cx.cells_of_dim(p);
    let local: HashMap<usize, usize> = cells.iter().enumerate().map(|(l, &c)| (c, l)).collect();
    let mut succ = vec![Vec::new(); cells.len()];
    for (l, &c) in cells.iter().enumerate() {
        if let Some(head) = field.head_of(c) {
            for &f in cx.faces_ix(head) {
                if f != c {
                    succ[l].push(local[&f]);
                }
            }
            succ[l].sort_unstable();
        }
    }
    SuccessorGraph {
        index: p,
        cells,
        succ,
        local,
    }
}

/// A V-path as an explicit alternating cell sequence, used to re-validate
/// enumerated orbits against the defining clauses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VPath {
    pub index: usize,
    /// sigma^0, tau^0, sigma^1, ..., tau^{r-1}, sigma^r as canonical indices.
    pub cells: Vec<usize>,
}

impl VPath {
    pub fn length(&self) -> usize {
        self.cells.len() / 2
    }

    pub fn is_closed(&self) -> bool {
        self.length() > 0 && self.cells.first() == self.cells.last()
    }

    /// Check the defining clauses: V(sigma^i) = tau^i, sigma^{i+1} != sigma^i,
    /// and sigma^{i+1} a face of tau^i.
    pub fn is_valid(&self, field: &VectorField) -> bool {
        let cx = field.complex();
        if self.cells.is_empty() || self.cells.len() % 2 == 0 {
            return false;
        }
        for (i, &c) in self.cells.iter().enumerate() {
            let expect = if i % 2 == 0 { self.index } else { self.index + 1 };
            if cx.dim(c) != expect {
                return false;
            }
        }
        for step in 0..self.length() {
            let sigma = self.cells[2 * step];
            let tau = self.cells[2 * step + 1];
            let next = self.cells[2 * step + 2];
            if field.head_of(sigma) != Some(tau) {
                return false;
            }
            if next == sigma || !cx.faces_ix(tau).contains(&next) {
                return false;
            }
        }
        true
    }
}

/// A rotation class of closed V-paths. The stored representative starts at
/// the canonically smallest p-cell of the cycle, so orbit identity is
/// deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedOrbit {
    pub index: usize,
    /// The p-cells around the cycle, rotation-minimal, as canonical indices.
    pub sigmas: Vec<usize>,
    /// taus[i] = V(sigmas[i]).
    pub taus: Vec<usize>,
}

impl ClosedOrbit {
    pub fn len(&self) -> usize {
        self.sigmas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sigmas.is_empty()
    }

    /// Identity of the orbit: the id of its rotation-minimal starting cell.
    pub fn representative<'a>(&self, field: &'a VectorField) -> &'a CellId {
        field.complex().id(self.sigmas[0])
    }

    /// All member cells (p and p+1 dimensional), ascending.
    pub fn member_cells(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.sigmas.iter().chain(self.taus.iter()).copied().collect();
        v.sort_unstable();
        v
    }

    /// The underlying closed V-path of the representative rotation.
    pub fn to_path(&self) -> VPath {
        let mut cells = Vec::with_capacity(2 * self.len() + 1);
        for i in 0..self.len() {
            cells.push(self.sigmas[i]);
            cells.push(self.taus[i]);
        }
        cells.push(self.sigmas[0]);
        VPath {
            index: self.index,
            cells,
        }
    }
}

/// Enumerate every closed orbit of the field: one rotation-minimal
/// representative per elementary cycle of each successor graph, ordered by
/// (index, representative id). Fails if the number of elementary cycles
/// exceeds the configured budget.
pub fn closed_orbits(field: &VectorField, config: &Config) -> Result<Vec<ClosedOrbit>> {
    let cx = field.complex();
    let mut orbits = Vec::new();
    let mut budget = config.cycle_budget;
    let m = cx.max_dim();
    if m < 0 {
        return Ok(orbits);
    }
    for p in 0..=m as usize {
        let graph = successor_graph(field, p);
        let cycles = elementary_cycles(&graph, &mut budget, config.cycle_budget)?;
        for cycle in cycles {
            // Rotate so the canonically smallest cell leads. Local order
            // follows canonical order, so comparing cell indices works.
            let min_pos = cycle
                .iter()
                .enumerate()
                .min_by_key(|(_, &l)| graph.cells[l])
                .map(|(i, _)| i)
                .unwrap();
            let sigmas: Vec<usize> = (0..cycle.len())
                .map(|i| graph.cells[cycle[(min_pos + i) % cycle.len()]])
                .collect();
            let taus: Vec<usize> = sigmas
                .iter()
                .map(|&s| field.head_of(s).expect("cycle cells are tails"))
                .collect();
            orbits.push(ClosedOrbit {
                index: p,
                sigmas,
                taus,
            });
        }
    }
    orbits.sort_by(|a, b| {
        a.index
            .cmp(&b.index)
            .then_with(|| cx.id(a.sigmas[0]).cmp(cx.id(b.sigmas[0])))
    });
    Ok(orbits)
}

/// Johnson-style enumeration of elementary cycles, as local node lists.
fn elementary_cycles(
    graph: &SuccessorGraph,
    budget: &mut usize,
    full_budget: usize,
) -> Result<Vec<Vec<usize>>> {
    let n = graph.len();
    let mut out = Vec::new();
    for start in 0..n {
        let mut blocked = vec![false; n];
        let mut blist: Vec<HashSet<usize>> = vec![HashSet::new(); n];
        blocked[start] = true;
        let neighbors = |node: usize| -> Vec<usize> {
            graph.succ[node]
                .iter()
                .copied()
                .filter(|&m| m >= start)
                .collect()
        };
        let mut path = vec![start];
        let mut stack = vec![(start, neighbors(start))];
        let mut closed: HashSet<usize> = HashSet::new();

        fn unblock(node: usize, blocked: &mut [bool], blist: &mut [HashSet<usize>]) {
            let mut todo = vec![node];
            while let Some(n) = todo.pop() {
                if blocked[n] {
                    blocked[n] = false;
                    todo.extend(blist[n].drain());
                }
            }
        }

        while let Some((node, next)) = stack.last_mut() {
            let node = *node;
            if let Some(m) = next.pop() {
                if m == start {
                    if *budget == 0 {
                        return Err(Error::CycleBudgetExceeded {
                            budget: full_budget,
                        });
                    }
                    *budget -= 1;
                    out.push(path.clone());
                    closed.extend(path.iter().copied());
                } else if !blocked[m] {
                    path.push(m);
                    blocked[m] = true;
                    closed.remove(&m);
                    stack.push((m, neighbors(m)));
                }
                continue;
            }
            if closed.contains(&node) {
                unblock(node, &mut blocked, &mut blist);
            } else {
                for m in neighbors(node) {
                    blist[m].insert(node);
                }
            }
            stack.pop();
            path.pop();
        }
    }
    Ok(out)
}

/// Walk the orbit's closed path and compose the facet-exchange bijections on
/// vertex sets. The orbit is twisted when the round trip is not the
/// identity on the starting cell's vertices.
pub fn is_twisted(field: &VectorField, orbit: &ClosedOrbit) -> Result<bool> {
    let cx = field.complex();
    if cx.mode() != ComplexMode::Simplicial {
        return Err(Error::UnsupportedForCw);
    }
    let start: Vec<u32> = cx.vertices(orbit.sigmas[0]).unwrap().to_vec();
    // position[i] = where vertex start[i] currently sits.
    let mut position = start.clone();
    for step in 0..orbit.len() {
        let cur = orbit.sigmas[step];
        let next = orbit.sigmas[(step + 1) % orbit.len()];
        let cur_v: HashSet<u32> = cx.vertices(cur).unwrap().iter().copied().collect();
        let next_v: HashSet<u32> = cx.vertices(next).unwrap().iter().copied().collect();
        let dropped: Vec<u32> = cur_v.difference(&next_v).copied().collect();
        let added: Vec<u32> = next_v.difference(&cur_v).copied().collect();
        // Facets of a common simplex differ in exactly one vertex.
        debug_assert_eq!(dropped.len(), 1);
        debug_assert_eq!(added.len(), 1);
        for pos in position.iter_mut() {
            if *pos == dropped[0] {
                *pos = added[0];
            }
        }
    }
    Ok(position != start)
}

/// The chain recurrent set and its partition into basic sets.
#[derive(Debug, Clone, Serialize)]
pub struct RecurrenceReport {
    /// Rest cell ids per dimension, 0..=max_dim.
    pub rest_cells: Vec<Vec<CellId>>,
    /// One summary per orbit, in canonical orbit order.
    pub orbits: Vec<OrbitSummary>,
    /// Disjoint groups of recurrent cells, each sorted, groups ordered by
    /// their smallest member.
    pub basic_sets: Vec<Vec<CellId>>,
    /// Representatives of the twisted orbits, when detection ran.
    pub twisted: Vec<CellId>,
    /// False in CW mode, where vertex identities are unavailable.
    pub twisted_checked: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitSummary {
    pub index: usize,
    pub representative: CellId,
    pub length: usize,
    pub cells: Vec<CellId>,
    pub twisted: Option<bool>,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Rest cells plus all cells on non-stationary closed paths, partitioned
/// into basic sets: two recurrent cells share a basic set exactly when some
/// closed path contains both.
pub fn chain_recurrent_set(field: &VectorField, config: &Config) -> Result<RecurrenceReport> {
    let cx = field.complex();
    let orbits = closed_orbits(field, config)?;

    let m = cx.max_dim();
    let rest_cells: Vec<Vec<CellId>> = if m < 0 {
        Vec::new()
    } else {
        (0..=m as usize).map(|k| field.rest_points(k)).collect()
    };

    // Cells on elementary cycles are exactly the cells on closed paths;
    // cycles sharing a cell concatenate, so union-find over the members
    // yields the basic sets.
    let mut uf = UnionFind::new(cx.len());
    let mut recurrent: BTreeSet<usize> = BTreeSet::new();
    for orbit in &orbits {
        let members = orbit.member_cells();
        for &c in &members {
            recurrent.insert(c);
            uf.union(members[0], c);
        }
    }
    for k in 0..rest_cells.len() {
        for ix in field.rest_points_ix(k) {
            recurrent.insert(ix);
        }
    }

    let mut groups: BTreeMap<usize, Vec<CellId>> = BTreeMap::new();
    for &c in &recurrent {
        groups.entry(uf.find(c)).or_default().push(cx.id(c).clone());
    }
    let basic_sets: Vec<Vec<CellId>> = groups.into_values().collect();

    let simplicial = cx.mode() == ComplexMode::Simplicial;
    let mut twisted = Vec::new();
    let mut summaries = Vec::new();
    for orbit in &orbits {
        let tw = if simplicial {
            Some(is_twisted(field, orbit)?)
        } else {
            None
        };
        if tw == Some(true) {
            twisted.push(orbit.representative(field).clone());
        }
        summaries.push(OrbitSummary {
            index: orbit.index,
            representative: orbit.representative(field).clone(),
            length: orbit.len(),
            cells: orbit.member_cells().iter().map(|&c| cx.id(c).clone()).collect(),
            twisted: tw,
        });
    }

    Ok(RecurrenceReport {
        rest_cells,
        orbits: summaries,
        basic_sets,
        twisted,
        twisted_checked: simplicial,
    })
}

/// Reachability and support data for the V-path families between two cell
/// sets of equal dimension `q`.
#[derive(Debug, Clone)]
pub struct VPathQuery {
    /// Sources from which some target is reachable; a source that is a
    /// target counts via the stationary path.
    pub reachable_sources: BTreeSet<CellId>,
    /// Heads of dimension q+1 lying on source-to-target walks.
    pub upper_support: BTreeSet<CellId>,
    /// Heads of dimension q lying on source-to-target walks.
    pub lower_support: BTreeSet<CellId>,
    /// Exact path counts mod 2 per (source, target), when requested.
    pub counts: Option<BTreeMap<(CellId, CellId), u8>>,
}

/// Reachability, walk support and (optionally) exact mod-2 path counts for
/// the family of V-paths from `sources` to `targets` at index `q`. Counting
/// fails with `NonterminatingPathFamily` when a cycle lies on a route.
pub fn v_paths_between(
    field: &VectorField,
    sources: &[CellId],
    targets: &[CellId],
    q: usize,
    with_counts: bool,
) -> Result<VPathQuery> {
    let cx = field.complex();
    let graph = successor_graph(field, q);
    let mut src_local = Vec::new();
    for s in sources {
        let ix = cx.index_of(s)?;
        src_local.push(graph.local_of(ix).ok_or_else(|| Error::UnknownCell(s.clone()))?);
    }
    let mut tgt_local = Vec::new();
    for t in targets {
        let ix = cx.index_of(t)?;
        tgt_local.push(graph.local_of(ix).ok_or_else(|| Error::UnknownCell(t.clone()))?);
    }

    let fwd = graph.reachable(&src_local);
    let bwd = graph.coreachable(&tgt_local);

    let target_set: HashSet<usize> = tgt_local.iter().copied().collect();
    let reachable_sources: BTreeSet<CellId> = src_local
        .iter()
        .filter(|&&s| {
            target_set.contains(&s) || {
                let hit = graph.reachable(&[s]);
                tgt_local.iter().any(|&t| hit[t])
            }
        })
        .map(|&s| cx.id(graph.cells[s]).clone())
        .collect();

    // Cells on walks: forward- and backward-reachable simultaneously.
    let mut lower_support = BTreeSet::new();
    let mut upper_support = BTreeSet::new();
    for l in 0..graph.len() {
        if !(fwd[l] && bwd[l]) {
            continue;
        }
        let cell = graph.cells[l];
        if field.role(cell) == Role::Head {
            lower_support.insert(cx.id(cell).clone());
        }
        if let Some(head) = field.head_of(cell) {
            // The matched coface lies on a walk when some successor step
            // through it continues toward a target.
            let continues = graph.succ[l].iter().any(|&m| bwd[m]);
            if continues {
                upper_support.insert(cx.id(head).clone());
            }
        }
    }

    let counts = if with_counts {
        let mut map = BTreeMap::new();
        for (&t_local, t_id) in tgt_local.iter().zip(targets) {
            let count = count_paths_to(&graph, &src_local, t_local)?;
            for (&s_local, s_id) in src_local.iter().zip(sources) {
                map.insert(
                    (s_id.clone(), t_id.clone()),
                    (count[s_local] % 2) as u8,
                );
            }
        }
        Some(map)
    } else {
        None
    };

    Ok(VPathQuery {
        reachable_sources,
        upper_support,
        lower_support,
        counts,
    })
}

/// Exact number of V-paths from every node to `target`, restricted to the
/// region that can reach the target. Errors when that region has a cycle on
/// a route from one of `roots`.
fn count_paths_to(graph: &SuccessorGraph, roots: &[usize], target: usize) -> Result<Vec<u64>> {
    let can_reach = graph.coreachable(&[target]);
    #[derive(Clone, Copy, PartialEq)]
    enum State {
        Unvisited,
        Active,
        Done,
    }
    let mut state = vec![State::Unvisited; graph.len()];
    let mut count = vec![0u64; graph.len()];

    // Iterative post-order DFS over the relevant region.
    for &root in roots {
        if !can_reach[root] || state[root] == State::Done {
            continue;
        }
        let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
        state[root] = State::Active;
        while let Some(&mut (n, ref mut next)) = stack.last_mut() {
            let succs: Vec<usize> = graph.succ[n].iter().copied().filter(|&m| can_reach[m]).collect();
            if *next < succs.len() {
                let m = succs[*next];
                *next += 1;
                match state[m] {
                    State::Active => {
                        return Err(Error::NonterminatingPathFamily {
                            source: CellId(format!("{}", graph.cells[n])),
                            target: CellId(format!("{}", graph.cells[target])),
                        })
                    }
                    State::Unvisited => {
                        state[m] = State::Active;
                        stack.push((m, 0));
                    }
                    State::Done => {}
                }
            } else {
                let mut total: u64 = if n == target { 1 } else { 0 };
                for &m in &succs {
                    total = total.saturating_add(count[m]);
                }
                count[n] = total;
                state[n] = State::Done;
                stack.pop();
            }
        }
    }
    Ok(count)
}

/// Exact number of V-paths from `source` to `target` at index `q`.
/// Stationary paths count: if source equals target the total includes 1.
pub(crate) fn count_paths_exact_ix(
    field: &VectorField,
    source: usize,
    target: usize,
    q: usize,
) -> Result<u64> {
    let graph = successor_graph(field, q);
    let s = graph.local_of(source).expect("source has dimension q");
    let t = graph.local_of(target).expect("target has dimension q");
    let counts = count_paths_to(&graph, &[s], t).map_err(|e| match e {
        Error::NonterminatingPathFamily { .. } => Error::NonterminatingPathFamily {
            source: field.complex().id(source).clone(),
            target: field.complex().id(target).clone(),
        },
        other => other,
    })?;
    Ok(counts[s])
}

/// Whether a field is gradient: no successor graph has a cycle.
pub fn is_gradient(field: &VectorField) -> bool {
    let m = field.complex().max_dim();
    if m < 0 {
        return true;
    }
    (0..=m as usize).all(|p| !successor_graph(field, p).has_cycle())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::parse_fixture;

    fn cfg() -> Config {
        Config::default()
    }

    #[test]
    fn tetrahedron_successor_graphs() {
        let (cx, f) = parse_fixture(crate::fixtures::TETRAHEDRON).unwrap();
        let g0 = successor_graph(&f, 0);
        // 0 -> 1 -> 2 -> 0, vertex 3 isolated.
        let ix = |s: &str| cx.index_of(&s.into()).unwrap();
        let l = |s: &str| g0.local_of(ix(s)).unwrap();
        assert_eq!(g0.succ[l("0")], vec![l("1")]);
        assert_eq!(g0.succ[l("1")], vec![l("2")]);
        assert_eq!(g0.succ[l("2")], vec![l("0")]);
        assert!(g0.succ[l("3")].is_empty());

        let g1 = successor_graph(&f, 1);
        let l1 = |s: &str| g1.local_of(ix(s)).unwrap();
        assert!(g1.succ[l1("0.3")].contains(&l1("1.3")));
        assert!(g1.succ[l1("1.3")].contains(&l1("2.3")));
        assert!(g1.succ[l1("2.3")].contains(&l1("0.3")));
    }

    #[test]
    fn zero_field_has_edgeless_graphs_and_no_orbits() {
        let cx = std::sync::Arc::new(crate::complex::parse_complex("simplex 0 1 2\n").unwrap());
        let f = crate::field::parse_field(cx, "").unwrap();
        let g = successor_graph(&f, 0);
        assert!(g.succ.iter().all(|s| s.is_empty()));
        assert!(closed_orbits(&f, &cfg()).unwrap().is_empty());
        assert!(is_gradient(&f));
    }

    #[test]
    fn tetrahedron_has_two_orbits() {
        let (cx, f) = parse_fixture(crate::fixtures::TETRAHEDRON).unwrap();
        let orbits = closed_orbits(&f, &cfg()).unwrap();
        assert_eq!(orbits.len(), 2);
        assert_eq!(orbits[0].index, 0);
        assert_eq!(orbits[1].index, 1);
        assert_eq!(orbits[0].representative(&f), &CellId("0".into()));
        assert_eq!(orbits[1].representative(&f), &CellId("0.3".into()));
        let cells0: Vec<&str> = orbits[0]
            .member_cells()
            .iter()
            .map(|&c| cx.id(c).as_str())
            .collect();
        assert_eq!(cells0, vec!["0", "1", "2", "0.1", "0.2", "1.2"]);
        for orbit in &orbits {
            assert!(orbit.to_path().is_valid(&f));
            assert!(orbit.to_path().is_closed());
            assert!(!is_twisted(&f, orbit).unwrap());
        }
    }

    #[test]
    fn recurrence_report_for_tetrahedron() {
        let (_, f) = parse_fixture(crate::fixtures::TETRAHEDRON).unwrap();
        let report = chain_recurrent_set(&f, &cfg()).unwrap();
        let recurrent: usize = report.basic_sets.iter().map(|g| g.len()).sum();
        assert_eq!(recurrent, 14);
        assert_eq!(report.basic_sets.len(), 4);
        assert!(report.twisted.is_empty());
        assert!(report.twisted_checked);
    }

    #[test]
    fn zero_field_recurrence_is_everything_in_singletons() {
        let cx = std::sync::Arc::new(crate::complex::parse_complex("simplex 0 1 2\n").unwrap());
        let f = crate::field::parse_field(cx, "").unwrap();
        let report = chain_recurrent_set(&f, &cfg()).unwrap();
        assert_eq!(report.basic_sets.len(), 7);
        assert!(report.basic_sets.iter().all(|g| g.len() == 1));
    }

    #[test]
    fn k4_recurrence() {
        let (_, f) = parse_fixture(crate::fixtures::K4).unwrap();
        let report = chain_recurrent_set(&f, &cfg()).unwrap();
        assert_eq!(report.orbits.len(), 1);
        assert_eq!(report.rest_cells[0], vec![CellId("3".into())]);
        assert_eq!(report.rest_cells[1].len(), 3);
    }

    #[test]
    fn klein_red_orbit_is_twisted() {
        let (_, f) = parse_fixture(crate::fixtures::KLEIN).unwrap();
        let report = chain_recurrent_set(&f, &cfg()).unwrap();
        assert_eq!(report.orbits.len(), 2);
        assert_eq!(report.twisted.len(), 1);
        let twisted_orbit = report
            .orbits
            .iter()
            .find(|o| o.twisted == Some(true))
            .unwrap();
        assert_eq!(twisted_orbit.index, 1);
    }

    #[test]
    fn index_zero_orbits_are_never_twisted() {
        let (_, f) = parse_fixture(crate::fixtures::TETRAHEDRON).unwrap();
        let orbits = closed_orbits(&f, &cfg()).unwrap();
        assert!(!is_twisted(&f, &orbits[0]).unwrap());
    }

    #[test]
    fn twisted_check_rejected_in_cw_mode() {
        let (_, f) = parse_fixture(crate::fixtures::CUBE).unwrap();
        let orbits = closed_orbits(&f, &cfg()).unwrap();
        assert!(matches!(
            is_twisted(&f, &orbits[0]),
            Err(Error::UnsupportedForCw)
        ));
    }

    #[test]
    fn k4_path_counts() {
        let (_, f) = parse_fixture(crate::fixtures::K4).unwrap();
        // Faces of edge 0.3 are {0, 3}; only the stationary path at 3
        // arrives, the other face enters the orbit and never returns.
        let q = v_paths_between(&f, &["0".into(), "3".into()], &["3".into()], 0, true).unwrap();
        assert_eq!(q.reachable_sources, std::iter::once(CellId("3".into())).collect());
        let counts = q.counts.unwrap();
        assert_eq!(counts[&("3".into(), "3".into())], 1);
        assert_eq!(counts[&("0".into(), "3".into())], 0);
    }

    #[test]
    fn sources_equal_targets_reach_trivially() {
        let (_, f) = parse_fixture(crate::fixtures::TETRAHEDRON).unwrap();
        let q = v_paths_between(&f, &["0.1".into()], &["0.1".into()], 1, false).unwrap();
        assert_eq!(q.reachable_sources.len(), 1);
        assert!(q.upper_support.is_empty());
    }

    #[test]
    fn counting_through_a_cycle_fails() {
        let (_, f) = parse_fixture(crate::fixtures::TETRAHEDRON).unwrap();
        // Vertex 0 lies on the index-0 orbit; paths from 0 to 1 never stop
        // accumulating.
        let err = v_paths_between(&f, &["0".into()], &["1".into()], 0, true).unwrap_err();
        assert!(matches!(err, Error::NonterminatingPathFamily { .. }));
    }

    #[test]
    fn cycle_budget_is_enforced() {
        let (_, f) = parse_fixture(crate::fixtures::TETRAHEDRON).unwrap();
        let tight = Config {
            cycle_budget: 1,
            ..Config::default()
        };
        assert!(matches!(
            closed_orbits(&f, &tight),
            Err(Error::CycleBudgetExceeded { .. })
        ));
    }
}
