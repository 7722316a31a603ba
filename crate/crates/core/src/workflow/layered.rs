//! Synthetic layered workflows for tests and benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use super::{DataEdge, Task, Workflow};

/// Shape of a synthetic workflow: task counts per layer, value ranges for
/// task lengths and edge sizes, and the probability of each possible
/// edge between adjacent layers.
#[derive(Debug, Clone, PartialEq)]
pub struct LayeredSpec {
    /// Tasks per layer; each width must be at least 1.
    pub layers: Vec<usize>,
    /// Task length range in MI, inclusive bounds.
    pub length_range: (f64, f64),
    /// Edge size range in Mb, inclusive bounds.
    pub edge_size_range: (f64, f64),
    /// Probability of each (previous-layer, current-layer) edge.
    pub inter_layer_density: f64,
}

impl Default for LayeredSpec {
    fn default() -> Self {
        LayeredSpec {
            layers: vec![1, 3, 1],
            length_range: (100.0, 1000.0),
            edge_size_range: (10.0, 100.0),
            inter_layer_density: 0.5,
        }
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum LayeredSpecError {
    #[error("layer list must be non-empty")]
    NoLayers,
    #[error("layer {index} has width 0")]
    ZeroWidth { index: usize },
    #[error("range ({min}, {max}) is not ordered or not positive where required")]
    BadRange { min: f64, max: f64 },
    #[error("density {0} is outside [0, 1]")]
    BadDensity(f64),
}

impl LayeredSpec {
    pub fn validate(&self) -> Result<(), LayeredSpecError> {
        if self.layers.is_empty() {
            return Err(LayeredSpecError::NoLayers);
        }
        if let Some(index) = self.layers.iter().position(|&w| w == 0) {
            return Err(LayeredSpecError::ZeroWidth { index });
        }
        let (lmin, lmax) = self.length_range;
        if !(lmin > 0.0 && lmin <= lmax && lmax.is_finite()) {
            return Err(LayeredSpecError::BadRange { min: lmin, max: lmax });
        }
        let (smin, smax) = self.edge_size_range;
        if !(smin >= 0.0 && smin <= smax && smax.is_finite()) {
            return Err(LayeredSpecError::BadRange { min: smin, max: smax });
        }
        if !(0.0..=1.0).contains(&self.inter_layer_density) {
            return Err(LayeredSpecError::BadDensity(self.inter_layer_density));
        }
        Ok(())
    }

    pub fn task_count(&self) -> usize {
        self.layers.iter().sum()
    }
}

fn uniform_in(rng: &mut ChaCha8Rng, (min, max): (f64, f64)) -> f64 {
    if min == max {
        return min;
    }
    rng.random_range(min..=max)
}

/// Generates a layered workflow, deterministically for a fixed seed.
///
/// Tasks are numbered layer by layer. Each candidate edge between adjacent
/// layers is kept with probability `inter_layer_density`; every task
/// outside the first layer is then guaranteed at least one parent in the
/// previous layer.
pub fn generate_layered(spec: &LayeredSpec, seed: u64) -> Result<Workflow, LayeredSpecError> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = spec.task_count();

    let mut tasks = Vec::with_capacity(n);
    for id in 0..n {
        tasks.push(Task {
            id,
            label: format!("t{id:04}"),
            length: uniform_in(&mut rng, spec.length_range),
        });
    }

    let mut edges = Vec::new();
    let mut layer_start = 0usize;
    for pair in spec.layers.windows(2) {
        let (prev_width, cur_width) = (pair[0], pair[1]);
        let prev_range = layer_start..layer_start + prev_width;
        let cur_start = layer_start + prev_width;
        for child in cur_start..cur_start + cur_width {
            let mut parent_count = 0usize;
            for parent in prev_range.clone() {
                if rng.random::<f64>() < spec.inter_layer_density {
                    edges.push(DataEdge {
                        parent,
                        child,
                        size: uniform_in(&mut rng, spec.edge_size_range),
                    });
                    parent_count += 1;
                }
            }
            if parent_count == 0 {
                let parent = prev_range.start + rng.random_range(0..prev_width);
                edges.push(DataEdge {
                    parent,
                    child,
                    size: uniform_in(&mut rng, spec.edge_size_range),
                });
            }
        }
        layer_start += prev_width;
    }

    let workflow = Workflow {
        name: format!(
            "layered-{}-seed{seed}",
            spec.layers
                .iter()
                .map(|w| w.to_string())
                .collect::<Vec<_>>()
                .join("x")
        ),
        tasks,
        edges,
    };
    debug_assert!(workflow.validate().is_valid());
    Ok(workflow)
}
