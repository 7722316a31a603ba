//! Workflow DAG model: tasks, data edges, validation, topological order,
//! plus a Pegasus DAX reader/writer and a synthetic layered generator.

pub mod dax;
pub mod layered;

pub use layered::{generate_layered, LayeredSpec};

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;

use thiserror::Error;

/// One workflow task. `length` is the compute demand in million
/// instructions (MI); execution time on a resource is `length / mips`.
#[derive(Debug, Clone, PartialEq)]
pub struct Task {
    /// Internal id; equals the task's index in its workflow.
    pub id: usize,
    /// External name, e.g. the DAX job id.
    pub label: String,
    /// Compute demand in MI; must be positive.
    pub length: f64,
}

/// Directed data dependency: `parent` produces `size` megabits consumed by
/// `child`. Zero-size edges carry precedence only.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DataEdge {
    pub parent: usize,
    pub child: usize,
    /// Transferred volume in megabits.
    pub size: f64,
}

/// A workflow DAG. Plain data; use [`Workflow::validate`] to check the
/// structural invariants before handing it to the simulator.
#[derive(Debug, Clone, PartialEq)]
pub struct Workflow {
    pub name: String,
    pub tasks: Vec<Task>,
    pub edges: Vec<DataEdge>,
}

/// One violated workflow invariant.
#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    Empty,
    /// `tasks[index].id` differs from `index`.
    NonContiguousId { index: usize, id: usize },
    NonPositiveLength { task: usize, length: f64 },
    DanglingEdge { parent: usize, child: usize },
    SelfLoop { task: usize },
    DuplicateEdge { parent: usize, child: usize },
    NegativeEdgeSize { parent: usize, child: usize, size: f64 },
    /// `member` lies on at least one dependency cycle.
    Cycle { member: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Empty => write!(f, "workflow has no tasks"),
            Violation::NonContiguousId { index, id } => {
                write!(f, "task at position {index} has id {id}; ids must equal positions")
            }
            Violation::NonPositiveLength { task, length } => {
                write!(f, "task {task} has non-positive length {length}")
            }
            Violation::DanglingEdge { parent, child } => {
                write!(f, "edge {parent}->{child} references a missing task")
            }
            Violation::SelfLoop { task } => write!(f, "task {task} depends on itself"),
            Violation::DuplicateEdge { parent, child } => {
                write!(f, "more than one edge for task pair {parent}->{child}")
            }
            Violation::NegativeEdgeSize { parent, child, size } => {
                write!(f, "edge {parent}->{child} has negative size {size}")
            }
            Violation::Cycle { member } => {
                write!(f, "dependency cycle detected (task {member} is on it)")
            }
        }
    }
}

/// Outcome of [`Workflow::validate`]: empty means the workflow is valid.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("dependency cycle detected (task {member} is on it)")]
pub struct CycleError {
    pub member: usize,
}

impl Workflow {
    pub fn task_count(&self) -> usize {
        self.tasks.len()
    }

    /// Checks every structural invariant and reports the full list of
    /// violations; an empty report means valid.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let n = self.tasks.len();
        if n == 0 {
            violations.push(Violation::Empty);
        }
        for (index, task) in self.tasks.iter().enumerate() {
            if task.id != index {
                violations.push(Violation::NonContiguousId { index, id: task.id });
            }
            if !(task.length > 0.0) {
                violations.push(Violation::NonPositiveLength {
                    task: index,
                    length: task.length,
                });
            }
        }
        let mut seen = std::collections::HashSet::new();
        let mut structurally_sound = true;
        for e in &self.edges {
            if e.parent >= n || e.child >= n {
                violations.push(Violation::DanglingEdge {
                    parent: e.parent,
                    child: e.child,
                });
                structurally_sound = false;
                continue;
            }
            if e.parent == e.child {
                violations.push(Violation::SelfLoop { task: e.parent });
                structurally_sound = false;
                continue;
            }
            if !seen.insert((e.parent, e.child)) {
                violations.push(Violation::DuplicateEdge {
                    parent: e.parent,
                    child: e.child,
                });
            }
            if e.size < 0.0 {
                violations.push(Violation::NegativeEdgeSize {
                    parent: e.parent,
                    child: e.child,
                    size: e.size,
                });
            }
        }
        // Cycle detection only makes sense once edges reference real tasks.
        if structurally_sound {
            if let Err(err) = topological_order(self) {
                violations.push(Violation::Cycle { member: err.member });
            }
        }
        ValidationReport { violations }
    }

    /// Parent list per task as `(parent, edge size)`, in edge order.
    pub fn parents(&self) -> Vec<Vec<(usize, f64)>> {
        let mut parents = vec![Vec::new(); self.tasks.len()];
        for e in &self.edges {
            parents[e.child].push((e.parent, e.size));
        }
        parents
    }

    /// Child list per task, in edge order.
    pub fn children(&self) -> Vec<Vec<usize>> {
        let mut children = vec![Vec::new(); self.tasks.len()];
        for e in &self.edges {
            children[e.parent].push(e.child);
        }
        children
    }

    /// Total compute demand in MI.
    pub fn total_length(&self) -> f64 {
        self.tasks.iter().map(|t| t.length).sum()
    }

    /// Total transferred volume in Mb.
    pub fn total_edge_size(&self) -> f64 {
        self.edges.iter().map(|e| e.size).sum()
    }

    /// Longest path measured in tasks (a single task has depth 1).
    pub fn depth(&self) -> usize {
        let order = topological_order(self).expect("depth requires an acyclic workflow");
        let parents = self.parents();
        let mut depth = vec![1usize; self.tasks.len()];
        for &t in &order {
            for &(p, _) in &parents[t] {
                depth[t] = depth[t].max(depth[p] + 1);
            }
        }
        depth.into_iter().max().unwrap_or(0)
    }
}

/// Topological order with ties broken by ascending task id, so the result
/// is unique and deterministic. Fails on cyclic workflows, naming one task
/// that lies on a cycle.
pub fn topological_order(workflow: &Workflow) -> Result<Vec<usize>, CycleError> {
    let n = workflow.tasks.len();
    let mut indegree = vec![0usize; n];
    let mut children = vec![Vec::new(); n];
    for e in &workflow.edges {
        indegree[e.child] += 1;
        children[e.parent].push(e.child);
    }
    let mut ready: BinaryHeap<Reverse<usize>> = (0..n)
        .filter(|&t| indegree[t] == 0)
        .map(Reverse)
        .collect();
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse(t)) = ready.pop() {
        order.push(t);
        for &c in &children[t] {
            indegree[c] -= 1;
            if indegree[c] == 0 {
                ready.push(Reverse(c));
            }
        }
    }
    if order.len() == n {
        return Ok(order);
    }
    Err(CycleError {
        member: find_cycle_member(n, &workflow.edges, &indegree),
    })
}

/// Walks predecessors inside the residual graph (nodes with nonzero
/// indegree after Kahn's algorithm) until a node repeats; that node is on a
/// cycle.
fn find_cycle_member(n: usize, edges: &[DataEdge], residual_indegree: &[usize]) -> usize {
    let residual: Vec<bool> = (0..n).map(|t| residual_indegree[t] > 0).collect();
    let mut parents = vec![Vec::new(); n];
    for e in edges {
        if residual[e.parent] && residual[e.child] {
            parents[e.child].push(e.parent);
        }
    }
    let start = (0..n).find(|&t| residual[t]).expect("residual graph is non-empty");
    let mut visited = vec![false; n];
    let mut current = start;
    loop {
        if visited[current] {
            return current;
        }
        visited[current] = true;
        // Every residual node has a residual parent, or it would have been
        // drained by Kahn's algorithm.
        current = parents[current][0];
    }
}
