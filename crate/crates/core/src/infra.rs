//! Three-tier compute pool: end devices, fog nodes, and cloud servers.
//!
//! A [`ResourcePool`] is an ordered list of [`Resource`]s with processing
//! rate, pricing, power, and bandwidth attributes. Link-level queries
//! (path bandwidth, per-megabit transfer tariff) are answered here.

use thiserror::Error;

/// Tier a resource belongs to. Ordering (`End < Fog < Cloud`) is used for
/// reporting only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Layer {
    EndDevice,
    Fog,
    Cloud,
}

impl Layer {
    pub fn as_str(&self) -> &'static str {
        match self {
            Layer::EndDevice => "end",
            Layer::Fog => "fog",
            Layer::Cloud => "cloud",
        }
    }
}

/// One compute resource.
///
/// Power ratings fold the voltage/frequency constants of the underlying
/// energy model into two fixed wattages: `working_power` while a task is
/// executing and `idle_power` otherwise.
#[derive(Debug, Clone, PartialEq)]
pub struct Resource {
    /// Index of this resource inside its pool (0-based).
    pub id: usize,
    pub layer: Layer,
    /// Processing rate in MIPS.
    pub mips: f64,
    /// Execution tariff in $ per second of busy time.
    pub exec_cost_rate: f64,
    /// Transfer tariff in $ per megabit moved over this resource's links.
    pub comm_cost_rate: f64,
    /// Active-mode draw in watts.
    pub working_power: f64,
    /// Idle-mode draw in watts.
    pub idle_power: f64,
    /// Outgoing bandwidth in Mbps.
    pub uplink: f64,
    /// Incoming bandwidth in Mbps.
    pub downlink: f64,
}

/// Ordered collection of resources; ids are contiguous `0..m`.
#[derive(Debug, Clone, PartialEq)]
pub struct ResourcePool {
    resources: Vec<Resource>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InfraError {
    #[error("resource pool must contain at least one resource")]
    EmptyPool,
    #[error("resource id {id} out of range (pool has {len} resources)")]
    InvalidResourceId { id: usize, len: usize },
}

// Built-in testbed parameters, one row per layer:
// (mips, exec $/s, comm $/Mb, working W, idle W, uplink Mbps, downlink Mbps)
const END_DEVICE_PARAMS: (f64, f64, f64, f64, f64, f64, f64) =
    (1000.0, 0.0, 0.0, 700.0, 30.0, 20.0, 40.0);
const FOG_NODE_PARAMS: (f64, f64, f64, f64, f64, f64, f64) =
    (1300.0, 0.48, 0.01, 800.0, 40.0, 10.0, 10.0);
const CLOUD_SERVER_PARAMS: (f64, f64, f64, f64, f64, f64, f64) =
    (1600.0, 0.96, 0.02, 1600.0, 1300.0, 1.0, 10.0);

fn make_resource(id: usize, layer: Layer) -> Resource {
    let (mips, exec, comm, working, idle, up, down) = match layer {
        Layer::EndDevice => END_DEVICE_PARAMS,
        Layer::Fog => FOG_NODE_PARAMS,
        Layer::Cloud => CLOUD_SERVER_PARAMS,
    };
    Resource {
        id,
        layer,
        mips,
        exec_cost_rate: exec,
        comm_cost_rate: comm,
        working_power: working,
        idle_power: idle,
        uplink: up,
        downlink: down,
    }
}

/// Builds the default testbed pool: `n_end` end devices, then `n_fog` fog
/// nodes, then `n_cloud` cloud servers, with the built-in per-layer
/// parameters.
pub fn default_testbed(
    n_end: usize,
    n_fog: usize,
    n_cloud: usize,
) -> Result<ResourcePool, InfraError> {
    let total = n_end + n_fog + n_cloud;
    if total == 0 {
        return Err(InfraError::EmptyPool);
    }
    let mut resources = Vec::with_capacity(total);
    for _ in 0..n_end {
        resources.push(make_resource(resources.len(), Layer::EndDevice));
    }
    for _ in 0..n_fog {
        resources.push(make_resource(resources.len(), Layer::Fog));
    }
    for _ in 0..n_cloud {
        resources.push(make_resource(resources.len(), Layer::Cloud));
    }
    Ok(ResourcePool { resources })
}

impl ResourcePool {
    /// Builds a pool from an explicit resource table. Ids are rewritten to
    /// the positional order.
    pub fn from_resources(mut resources: Vec<Resource>) -> Result<Self, InfraError> {
        if resources.is_empty() {
            return Err(InfraError::EmptyPool);
        }
        for (i, r) in resources.iter_mut().enumerate() {
            r.id = i;
        }
        Ok(ResourcePool { resources })
    }

    pub fn len(&self) -> usize {
        self.resources.len()
    }

    pub fn is_empty(&self) -> bool {
        self.resources.is_empty()
    }

    pub fn resources(&self) -> &[Resource] {
        &self.resources
    }

    pub fn get(&self, id: usize) -> Result<&Resource, InfraError> {
        self.resources.get(id).ok_or(InfraError::InvalidResourceId {
            id,
            len: self.resources.len(),
        })
    }

    /// Effective bandwidth in Mbps on the path `src -> dst`.
    ///
    /// Co-located endpoints transfer instantly, modeled as infinite
    /// bandwidth. Otherwise the path is limited by the sender's uplink and
    /// the receiver's downlink.
    pub fn link_bandwidth(&self, src: usize, dst: usize) -> Result<f64, InfraError> {
        let s = self.get(src)?;
        let d = self.get(dst)?;
        if src == dst {
            return Ok(f64::INFINITY);
        }
        Ok(s.uplink.min(d.downlink))
    }

    /// Transfer tariff in $ per megabit on the path `src -> dst`; zero when
    /// both tasks run on the same resource, otherwise the costlier
    /// endpoint's rate.
    pub fn unit_comm_cost(&self, src: usize, dst: usize) -> Result<f64, InfraError> {
        let s = self.get(src)?;
        let d = self.get(dst)?;
        if src == dst {
            return Ok(0.0);
        }
        Ok(s.comm_cost_rate.max(d.comm_cost_rate))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_testbed_end_device_parameters() {
        let pool = default_testbed(1, 0, 0).unwrap();
        let r = pool.get(0).unwrap();
        assert_eq!(r.layer, Layer::EndDevice);
        assert_eq!(r.mips, 1000.0);
        assert_eq!(r.exec_cost_rate, 0.0);
        assert_eq!(r.comm_cost_rate, 0.0);
        assert_eq!(r.working_power, 700.0);
        assert_eq!(r.idle_power, 30.0);
        assert_eq!(r.uplink, 20.0);
        assert_eq!(r.downlink, 40.0);
    }

    #[test]
    fn default_testbed_fog_parameters() {
        let pool = default_testbed(0, 1, 0).unwrap();
        let r = pool.get(0).unwrap();
        assert_eq!(r.layer, Layer::Fog);
        assert_eq!(r.mips, 1300.0);
        assert_eq!(r.exec_cost_rate, 0.48);
        assert_eq!(r.comm_cost_rate, 0.01);
        assert_eq!(r.working_power, 800.0);
        assert_eq!(r.idle_power, 40.0);
        assert_eq!(r.uplink, 10.0);
        assert_eq!(r.downlink, 10.0);
    }

    #[test]
    fn default_testbed_cloud_parameters() {
        let pool = default_testbed(0, 0, 1).unwrap();
        let r = pool.get(0).unwrap();
        assert_eq!(r.layer, Layer::Cloud);
        assert_eq!(r.mips, 1600.0);
        assert_eq!(r.exec_cost_rate, 0.96);
        assert_eq!(r.comm_cost_rate, 0.02);
        assert_eq!(r.working_power, 1600.0);
        assert_eq!(r.idle_power, 1300.0);
        assert_eq!(r.uplink, 1.0);
        assert_eq!(r.downlink, 10.0);
    }

    #[test]
    fn five_resource_pool_layout() {
        // One end device, two fog nodes, two cloud servers.
        let pool = default_testbed(1, 2, 2).unwrap();
        assert_eq!(pool.len(), 5);
        let layers: Vec<Layer> = pool.resources().iter().map(|r| r.layer).collect();
        assert_eq!(
            layers,
            vec![
                Layer::EndDevice,
                Layer::Fog,
                Layer::Fog,
                Layer::Cloud,
                Layer::Cloud
            ]
        );
        let ids: Vec<usize> = pool.resources().iter().map(|r| r.id).collect();
        assert_eq!(ids, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn default_experiment_pool_has_eleven_resources() {
        let pool = default_testbed(1, 5, 5).unwrap();
        assert_eq!(pool.len(), 11);
    }

    #[test]
    fn empty_pool_is_rejected() {
        assert_eq!(default_testbed(0, 0, 0), Err(InfraError::EmptyPool));
        assert_eq!(
            ResourcePool::from_resources(vec![]),
            Err(InfraError::EmptyPool)
        );
    }

    #[test]
    fn link_bandwidth_examples() {
        let pool = default_testbed(1, 1, 1).unwrap();
        // end -> fog: min(20, 10)
        assert_eq!(pool.link_bandwidth(0, 1).unwrap(), 10.0);
        // cloud -> end: min(1, 40)
        assert_eq!(pool.link_bandwidth(2, 0).unwrap(), 1.0);
        // co-located
        assert_eq!(pool.link_bandwidth(1, 1).unwrap(), f64::INFINITY);
        // end -> cloud: min(20, 10)
        assert_eq!(pool.link_bandwidth(0, 2).unwrap(), 10.0);
        // fog -> cloud: min(10, 10)
        assert_eq!(pool.link_bandwidth(1, 2).unwrap(), 10.0);
    }

    #[test]
    fn unit_comm_cost_examples() {
        let pool = default_testbed(1, 1, 1).unwrap();
        assert_eq!(pool.unit_comm_cost(1, 1).unwrap(), 0.0);
        assert_eq!(pool.unit_comm_cost(0, 1).unwrap(), 0.01);
        assert_eq!(pool.unit_comm_cost(1, 0).unwrap(), 0.01);
        assert_eq!(pool.unit_comm_cost(1, 2).unwrap(), 0.02);
        assert_eq!(pool.unit_comm_cost(2, 1).unwrap(), 0.02);
    }

    #[test]
    fn invalid_ids_are_errors() {
        let pool = default_testbed(1, 0, 0).unwrap();
        assert!(matches!(
            pool.link_bandwidth(0, 3),
            Err(InfraError::InvalidResourceId { id: 3, .. })
        ));
        assert!(matches!(
            pool.unit_comm_cost(5, 0),
            Err(InfraError::InvalidResourceId { id: 5, .. })
        ));
        assert!(pool.get(1).is_err());
    }
}
