//! Analytic lidar raycasting against walls, the can disc, and the robot
//! footprint.

use super::{ArenaConfig, LidarScan, WorldState};
use crate::geom::{Pose2D, Vec2};

/// Where a sensor is mounted. Corner sensors see the robot footprint; the
/// robot-mounted sensor does not test its own body.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SensorKind {
    RobotMounted,
    Corner,
}

/// Hits closer than this are treated as the sensor's own mounting point.
const T_MIN: f64 = 1e-9;

/// Cast `lidar_rays` rays spanning `[heading - fov/2, heading + fov/2]`
/// inclusive and return normalized ranges.
///
/// Each ray takes the nearest intersection with the four wall segments, the
/// can disc, and (for corner sensors) the robot rectangle; distances are
/// clamped to `lidar_max_range` and divided by it. A ray with no hit in
/// range reads 1.0.
pub fn raycast(
    sensor_pose: Pose2D,
    state: &WorldState,
    config: &ArenaConfig,
    sensor: SensorKind,
) -> LidarScan {
    let origin = sensor_pose.position();
    let hw = config.half_width();
    let hl = config.half_length();
    let walls = [
        (Vec2::new(-hw, -hl), Vec2::new(hw, -hl)),
        (Vec2::new(hw, -hl), Vec2::new(hw, hl)),
        (Vec2::new(hw, hl), Vec2::new(-hw, hl)),
        (Vec2::new(-hw, hl), Vec2::new(-hw, -hl)),
    ];
    let robot_edges = match sensor {
        SensorKind::Corner => Some(config.footprint(state.robot).edges()),
        SensorKind::RobotMounted => None,
    };

    let n = config.lidar_rays;
    let start = sensor_pose.heading - config.lidar_fov / 2.0;
    let step = config.lidar_fov / (n - 1) as f64;
    let mut ranges = Vec::with_capacity(n);
    for i in 0..n {
        let dir = Vec2::unit(start + step * i as f64);
        let mut nearest = f64::INFINITY;
        for (a, b) in &walls {
            if let Some(t) = ray_segment(origin, dir, *a, *b) {
                nearest = nearest.min(t);
            }
        }
        if let Some(t) = ray_circle(origin, dir, state.can, config.can_radius) {
            nearest = nearest.min(t);
        }
        if let Some(edges) = &robot_edges {
            for (a, b) in edges {
                if let Some(t) = ray_segment(origin, dir, *a, *b) {
                    nearest = nearest.min(t);
                }
            }
        }
        let clamped = nearest.min(config.lidar_max_range);
        ranges.push((clamped / config.lidar_max_range) as f32);
    }
    LidarScan { ranges }
}

/// Nearest intersection parameter of a ray with a segment, if any.
fn ray_segment(origin: Vec2, dir: Vec2, a: Vec2, b: Vec2) -> Option<f64> {
    let seg = b.sub(a);
    let denom = dir.cross(seg);
    if denom.abs() < 1e-15 {
        return None;
    }
    let rel = a.sub(origin);
    let t = rel.cross(seg) / denom;
    let s = rel.cross(dir) / denom;
    if t > T_MIN && (0.0..=1.0).contains(&s) {
        Some(t)
    } else {
        None
    }
}

/// Nearest intersection parameter of a ray with a circle, if any.
fn ray_circle(origin: Vec2, dir: Vec2, center: Vec2, radius: f64) -> Option<f64> {
    let to_center = center.sub(origin);
    let proj = to_center.dot(dir);
    let disc = proj * proj - (to_center.dot(to_center) - radius * radius);
    if disc < 0.0 {
        return None;
    }
    let sqrt_disc = disc.sqrt();
    let near = proj - sqrt_disc;
    if near > T_MIN {
        return Some(near);
    }
    let far = proj + sqrt_disc;
    if far > T_MIN {
        return Some(far);
    }
    None
}
