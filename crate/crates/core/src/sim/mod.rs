//! Deterministic 2D kinematic simulation of the arena, robot, can, and three
//! raycast lidar sensors.
//!
//! World coordinates are centered on the arena: x spans `[-width/2, width/2]`,
//! y spans `[-length/2, length/2]`. The robot is a rectangle whose body x axis
//! points along its heading; the robot lidar is mounted at the front-center of
//! the footprint, and the two corner lidars sit at opposite corners of the
//! arena diagonal, each facing the arena center.

mod raycast;
mod trajectory;

pub use raycast::{raycast, SensorKind};
pub use trajectory::{write_trajectory_csv, TrajectoryRow};

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geom::{wrap_angle, OrientedRect, Pose2D, Vec2};

/// Number of lidar sensors feeding the policy.
pub const NUM_SENSORS: usize = 3;

/// Number of discrete robot actions.
pub const NUM_ACTIONS: usize = 7;

/// Rejection-sampling budget for [`reset`].
const MAX_PLACEMENT_ATTEMPTS: usize = 10_000;

/// Discrete robot actions. The index mapping is fixed: policies output one
/// Q-value per action in this order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[repr(u8)]
pub enum Action {
    MoveLeft = 0,
    MoveRight = 1,
    MoveForward = 2,
    MoveBackward = 3,
    RotateCw = 4,
    RotateCcw = 5,
    Grip = 6,
}

impl Action {
    pub const ALL: [Action; NUM_ACTIONS] = [
        Action::MoveLeft,
        Action::MoveRight,
        Action::MoveForward,
        Action::MoveBackward,
        Action::RotateCw,
        Action::RotateCcw,
        Action::Grip,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(index: usize) -> Option<Action> {
        Action::ALL.get(index).copied()
    }

    pub fn name(self) -> &'static str {
        match self {
            Action::MoveLeft => "move_left",
            Action::MoveRight => "move_right",
            Action::MoveForward => "move_forward",
            Action::MoveBackward => "move_backward",
            Action::RotateCw => "rotate_cw",
            Action::RotateCcw => "rotate_ccw",
            Action::Grip => "grip",
        }
    }
}

/// Why an episode step ended (or did not).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[repr(u8)]
pub enum TerminationCause {
    Running = 0,
    GripSuccess = 1,
    GripFailure = 2,
    Collision = 3,
    StepCap = 4,
}

impl TerminationCause {
    pub fn is_terminal(self) -> bool {
        self != TerminationCause::Running
    }

    pub fn name(self) -> &'static str {
        match self {
            TerminationCause::Running => "running",
            TerminationCause::GripSuccess => "grip_success",
            TerminationCause::GripFailure => "grip_failure",
            TerminationCause::Collision => "collision",
            TerminationCause::StepCap => "step_cap",
        }
    }
}

/// Unvalidated arena parameters. Call [`ArenaParams::build`] to validate and
/// obtain an [`ArenaConfig`] usable by the simulator.
#[derive(Debug, Clone)]
pub struct ArenaParams {
    /// Arena extent along x, meters.
    pub width: f64,
    /// Arena extent along y, meters.
    pub length: f64,
    /// Robot footprint half extent along the heading, meters.
    pub robot_half_len: f64,
    /// Robot footprint half extent across the heading, meters.
    pub robot_half_wid: f64,
    pub can_radius: f64,
    pub lidar_rays: usize,
    pub lidar_fov: f64,
    pub lidar_max_range: f64,
    /// Poses of the two corner sensors; `None` places them at opposite
    /// corners of the arena diagonal facing the center.
    pub corner_sensors: Option<[Pose2D; 2]>,
    /// Translation per motion action, meters.
    pub translation_step: f64,
    /// Rotation per rotate action, radians.
    pub rotation_step: f64,
    /// Distance from the base center to the grip target, along the heading.
    pub grip_offset: f64,
    /// Grip succeeds when the can center is within this distance of the
    /// grip target.
    pub grip_tolerance: f64,
    /// Episode step cap.
    pub max_steps: u32,
}

impl Default for ArenaParams {
    fn default() -> Self {
        Self {
            width: 1.8,
            length: 2.7,
            // Kuka YouBot base footprint.
            robot_half_len: 0.29,
            robot_half_wid: 0.20,
            // Soda can.
            can_radius: 0.033,
            lidar_rays: 128,
            lidar_fov: PI,
            lidar_max_range: 4.0,
            corner_sensors: None,
            // 0.3 m/s and 0.9 rad/s at the 100 ms simulator step.
            translation_step: 0.03,
            rotation_step: 0.09,
            grip_offset: 0.4,
            grip_tolerance: 0.05,
            max_steps: 100,
        }
    }
}

impl ArenaParams {
    /// Validate the parameters and precompute derived geometry.
    pub fn build(self) -> Result<ArenaConfig> {
        let p = &self;
        let fail = |msg: String| Err(Error::Config(msg));
        if !(p.width > 0.0 && p.length > 0.0) {
            return fail(format!("arena must have positive extent, got {}x{}", p.width, p.length));
        }
        if p.lidar_rays < 2 {
            return fail(format!("lidar_rays must be >= 2, got {}", p.lidar_rays));
        }
        if !(p.lidar_fov > 0.0 && p.lidar_fov <= 2.0 * PI) {
            return fail(format!("lidar_fov must be in (0, 2*pi], got {}", p.lidar_fov));
        }
        if !(p.lidar_max_range > 0.0) {
            return fail(format!("lidar_max_range must be > 0, got {}", p.lidar_max_range));
        }
        if !(p.translation_step > 0.0 && p.rotation_step > 0.0) {
            return fail("motion step sizes must be > 0".to_string());
        }
        if !(p.robot_half_len > 0.0 && p.robot_half_wid > 0.0) {
            return fail("robot half extents must be > 0".to_string());
        }
        if !(p.can_radius > 0.0 && p.grip_tolerance > 0.0 && p.grip_offset >= 0.0) {
            return fail("can_radius and grip_tolerance must be > 0, grip_offset >= 0".to_string());
        }
        if p.max_steps == 0 {
            return fail("max_steps must be >= 1".to_string());
        }
        // Any start must be solvable within the step cap: the maximum travel
        // must cover the diagonal of the region reachable by the base center.
        let min_half = p.robot_half_len.min(p.robot_half_wid);
        let reach_x = (p.width - 2.0 * min_half).max(0.0);
        let reach_y = (p.length - 2.0 * min_half).max(0.0);
        let travel = p.max_steps as f64 * p.translation_step;
        if travel < reach_x.hypot(reach_y) {
            return fail(format!(
                "max_steps * translation_step = {travel:.3} m cannot cover the reachable \
                 diagonal {:.3} m",
                reach_x.hypot(reach_y)
            ));
        }

        let hw = p.width / 2.0;
        let hl = p.length / 2.0;
        let corner_sensors = self.corner_sensors.unwrap_or_else(|| {
            let mk = |x: f64, y: f64| Pose2D::new(x, y, wrap_angle(f64::atan2(-y, -x)));
            [mk(-hw, -hl), mk(hw, hl)]
        });
        for pose in &corner_sensors {
            if pose.x.abs() > hw + 1e-9 || pose.y.abs() > hl + 1e-9 {
                return fail(format!(
                    "corner sensor at ({}, {}) lies outside the arena",
                    pose.x, pose.y
                ));
            }
        }

        let mut config = ArenaConfig {
            width: p.width,
            length: p.length,
            robot_half_len: p.robot_half_len,
            robot_half_wid: p.robot_half_wid,
            can_radius: p.can_radius,
            lidar_rays: p.lidar_rays,
            lidar_fov: p.lidar_fov,
            lidar_max_range: p.lidar_max_range,
            corner_sensors,
            translation_step: p.translation_step,
            rotation_step: p.rotation_step,
            grip_offset: p.grip_offset,
            grip_tolerance: p.grip_tolerance,
            max_steps: p.max_steps,
            d_max: 0.0,
        };
        config.d_max = max_grip_can_distance(&config);
        if !(config.d_max > 0.0) {
            return fail("degenerate geometry: maximum grip-to-can distance is zero".to_string());
        }
        Ok(config)
    }
}

/// Validated arena configuration.
#[derive(Debug, Clone)]
pub struct ArenaConfig {
    pub width: f64,
    pub length: f64,
    pub robot_half_len: f64,
    pub robot_half_wid: f64,
    pub can_radius: f64,
    pub lidar_rays: usize,
    pub lidar_fov: f64,
    pub lidar_max_range: f64,
    pub corner_sensors: [Pose2D; 2],
    pub translation_step: f64,
    pub rotation_step: f64,
    pub grip_offset: f64,
    pub grip_tolerance: f64,
    pub max_steps: u32,
    d_max: f64,
}

impl Default for ArenaConfig {
    fn default() -> Self {
        ArenaParams::default().build().expect("default arena parameters are valid")
    }
}

impl ArenaConfig {
    /// Maximum achievable grip-target-to-can distance over all legal
    /// placements; the reward normalizer.
    pub fn d_max(&self) -> f64 {
        self.d_max
    }

    pub fn half_width(&self) -> f64 {
        self.width / 2.0
    }

    pub fn half_length(&self) -> f64 {
        self.length / 2.0
    }

    /// Robot footprint rectangle for a pose.
    pub fn footprint(&self, pose: Pose2D) -> OrientedRect {
        OrientedRect::new(pose, self.robot_half_len, self.robot_half_wid)
    }

    /// Whether the footprint lies entirely inside the arena (touching walls
    /// is allowed).
    pub fn footprint_inside(&self, pose: Pose2D) -> bool {
        let hw = self.half_width();
        let hl = self.half_length();
        self.footprint(pose)
            .corners()
            .iter()
            .all(|c| c.x.abs() <= hw && c.y.abs() <= hl)
    }

    /// Whether the can disc lies entirely inside the arena.
    pub fn can_inside(&self, can: Vec2) -> bool {
        can.x.abs() <= self.half_width() - self.can_radius
            && can.y.abs() <= self.half_length() - self.can_radius
    }

    /// Pose of the robot-mounted lidar: front-center of the footprint,
    /// facing the heading.
    pub fn robot_sensor_pose(&self, robot: Pose2D) -> Pose2D {
        let mount = robot.body_to_world(Vec2::new(self.robot_half_len, 0.0));
        Pose2D::new(mount.x, mount.y, robot.heading)
    }
}

/// Ground-truth simulator state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WorldState {
    pub robot: Pose2D,
    pub can: Vec2,
    pub steps_elapsed: u32,
}

/// One normalized lidar scan: `range / lidar_max_range` per ray, 1.0 for
/// no hit within range, 0.0 reserved for missing/dropped rays.
#[derive(Debug, Clone, PartialEq)]
pub struct LidarScan {
    pub ranges: Vec<f32>,
}

impl LidarScan {
    pub fn zeros(rays: usize) -> Self {
        Self { ranges: vec![0.0; rays] }
    }

    pub fn is_all_zero(&self) -> bool {
        self.ranges.iter().all(|&r| r == 0.0)
    }
}

/// Per-step sensor snapshot: one scan per sensor plus the availability mask.
///
/// Scan order is robot-mounted, corner 1, corner 2. The robot sensor is
/// hard-wired and always available; an unavailable sensor's scan is all-zero.
#[derive(Debug, Clone, PartialEq)]
pub struct Observation {
    pub scans: [LidarScan; NUM_SENSORS],
    pub available: [bool; NUM_SENSORS],
}

impl Observation {
    /// Copy with the given availability applied: scans of newly unavailable
    /// sensors are zeroed. Equivalent to re-observing the same state with
    /// this mask.
    pub fn with_availability(&self, available: [bool; NUM_SENSORS]) -> Observation {
        assert!(available[0], "the robot sensor is hard-wired and always available");
        let mut scans = self.scans.clone();
        for (scan, &avail) in scans.iter_mut().zip(&available) {
            if !avail {
                scan.ranges.iter_mut().for_each(|r| *r = 0.0);
            }
        }
        Observation { scans, available }
    }
}

/// Outcome of one simulator step.
#[derive(Debug, Clone)]
pub struct StepResult {
    /// Observation of the new state with all sensors available.
    pub observation: Observation,
    pub reward: f64,
    pub terminal: bool,
    pub cause: TerminationCause,
}

/// Sample a collision-free start configuration.
///
/// Robot pose and can position are drawn uniformly over the collision-free
/// placements by rejection sampling; the same seed always yields the same
/// state.
pub fn reset(rng_seed: u64, config: &ArenaConfig) -> Result<WorldState> {
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    reset_with_rng(&mut rng, config)
}

/// [`reset`] drawing from a caller-owned RNG (used by actors that derive
/// episode seeds from their own stream).
pub fn reset_with_rng(rng: &mut impl Rng, config: &ArenaConfig) -> Result<WorldState> {
    let hw = config.half_width();
    let hl = config.half_length();
    let can_x_max = hw - config.can_radius;
    let can_y_max = hl - config.can_radius;
    if can_x_max <= 0.0 || can_y_max <= 0.0 {
        return Err(Error::Placement { attempts: 0 });
    }
    for attempt in 1..=MAX_PLACEMENT_ATTEMPTS {
        let robot = Pose2D::new(
            rng.random_range(-hw..=hw),
            rng.random_range(-hl..=hl),
            rng.random_range(-PI..PI),
        );
        let can = Vec2::new(
            rng.random_range(-can_x_max..=can_x_max),
            rng.random_range(-can_y_max..=can_y_max),
        );
        if !config.footprint_inside(robot) {
            continue;
        }
        if config.footprint(robot).distance_to_point(can) <= config.can_radius {
            continue;
        }
        let _ = attempt;
        return Ok(WorldState {
            robot,
            can,
            steps_elapsed: 0,
        });
    }
    Err(Error::Placement {
        attempts: MAX_PLACEMENT_ATTEMPTS,
    })
}

/// The point in front of the robot where the hard-coded grip succeeds.
pub fn grip_target(robot: Pose2D, config: &ArenaConfig) -> Vec2 {
    robot.body_to_world(Vec2::new(config.grip_offset, 0.0))
}

/// Normalized negative distance of the can to the grip target, in `[-1, 0]`.
pub fn reward(state: &WorldState, config: &ArenaConfig) -> f64 {
    let d = grip_target(state.robot, config).distance(state.can);
    (-d / config.d_max).clamp(-1.0, 0.0)
}

/// Advance the world by one action.
///
/// Motion actions displace the robot in its body frame; colliding with a wall
/// or the can yields a fixed reward of -1 and terminates the episode (the
/// robot does not move into the colliding pose). `Grip` always terminates:
/// with `GripSuccess` if the can is within `grip_tolerance` of the grip
/// target, else `GripFailure` with the state's ordinary reward. Episodes are
/// capped at `max_steps`.
///
/// Stepping a terminal state is a contract violation; the caller tracks
/// terminality via [`StepResult`].
pub fn step(state: &WorldState, action: Action, config: &ArenaConfig) -> (WorldState, StepResult) {
    let steps_elapsed = state.steps_elapsed + 1;
    let mut next = WorldState {
        robot: state.robot,
        can: state.can,
        steps_elapsed,
    };

    let (reward_value, cause) = match action {
        Action::Grip => {
            let d = grip_target(state.robot, config).distance(state.can);
            let cause = if d <= config.grip_tolerance {
                TerminationCause::GripSuccess
            } else {
                TerminationCause::GripFailure
            };
            (reward(&next, config), cause)
        }
        _ => {
            let candidate = apply_motion(state.robot, action, config);
            let collided = !config.footprint_inside(candidate)
                || config.footprint(candidate).distance_to_point(state.can) < config.can_radius;
            if collided {
                (-1.0, TerminationCause::Collision)
            } else {
                next.robot = candidate;
                let cause = if steps_elapsed >= config.max_steps {
                    TerminationCause::StepCap
                } else {
                    TerminationCause::Running
                };
                (reward(&next, config), cause)
            }
        }
    };

    let result = StepResult {
        observation: observe(&next, [true; NUM_SENSORS], config),
        reward: reward_value,
        terminal: cause.is_terminal(),
        cause,
    };
    (next, result)
}

fn apply_motion(robot: Pose2D, action: Action, config: &ArenaConfig) -> Pose2D {
    let t = config.translation_step;
    match action {
        Action::MoveForward => translate(robot, Vec2::new(t, 0.0)),
        Action::MoveBackward => translate(robot, Vec2::new(-t, 0.0)),
        Action::MoveLeft => translate(robot, Vec2::new(0.0, t)),
        Action::MoveRight => translate(robot, Vec2::new(0.0, -t)),
        Action::RotateCw => Pose2D::new(robot.x, robot.y, robot.heading - config.rotation_step),
        Action::RotateCcw => Pose2D::new(robot.x, robot.y, robot.heading + config.rotation_step),
        Action::Grip => robot,
    }
}

fn translate(robot: Pose2D, body_delta: Vec2) -> Pose2D {
    let p = robot.body_to_world(body_delta);
    Pose2D::new(p.x, p.y, robot.heading)
}

/// Observe the state through all three sensors, zeroing scans flagged
/// unavailable. The robot sensor (index 0) is hard-wired and must be
/// available.
pub fn observe(
    state: &WorldState,
    available: [bool; NUM_SENSORS],
    config: &ArenaConfig,
) -> Observation {
    assert!(available[0], "the robot sensor is hard-wired and always available");
    let scan_for = |kind: SensorKind, pose: Pose2D, avail: bool| {
        if avail {
            raycast(pose, state, config, kind)
        } else {
            LidarScan::zeros(config.lidar_rays)
        }
    };
    let scans = [
        scan_for(SensorKind::RobotMounted, config.robot_sensor_pose(state.robot), true),
        scan_for(SensorKind::Corner, config.corner_sensors[0], available[1]),
        scan_for(SensorKind::Corner, config.corner_sensors[1], available[2]),
    ];
    Observation { scans, available }
}

/// Maximum grip-target-to-can distance over legal placements.
///
/// For a fixed heading the feasible base centers form a rectangle, so the
/// grip target extremes sit at its corners and the farthest can position is
/// an arena corner: the maximum over those 16 corner pairs is exact per
/// heading. The heading is scanned densely (hitting the axis-aligned kinks
/// exactly) and the best bracket is refined by golden-section search.
fn max_grip_can_distance(config: &ArenaConfig) -> f64 {
    let eval = |heading: f64| grip_corner_distance(config, heading);

    const SCAN: usize = 1 << 14;
    let mut best_h = 0.0;
    let mut best = f64::NEG_INFINITY;
    for k in 0..SCAN {
        let h = -PI + 2.0 * PI * k as f64 / SCAN as f64;
        let d = eval(h);
        if d > best {
            best = d;
            best_h = h;
        }
    }

    // Golden-section refinement around the best sample.
    let step = 2.0 * PI / SCAN as f64;
    let (mut lo, mut hi) = (best_h - step, best_h + step);
    let phi = (5f64.sqrt() - 1.0) / 2.0;
    for _ in 0..80 {
        let m1 = hi - phi * (hi - lo);
        let m2 = lo + phi * (hi - lo);
        if eval(m1) >= eval(m2) {
            hi = m2;
        } else {
            lo = m1;
        }
    }
    best.max(eval(0.5 * (lo + hi)))
}

/// Largest grip-target-to-can-corner distance at one heading.
fn grip_corner_distance(config: &ArenaConfig, heading: f64) -> f64 {
    let hw = config.half_width();
    let hl = config.half_length();
    let (s, c) = heading.sin_cos();
    // Footprint half extents in the world frame at this heading.
    let ext_x = config.robot_half_len * c.abs() + config.robot_half_wid * s.abs();
    let ext_y = config.robot_half_len * s.abs() + config.robot_half_wid * c.abs();
    if ext_x > hw || ext_y > hl {
        return f64::NEG_INFINITY;
    }
    let can_x = hw - config.can_radius;
    let can_y = hl - config.can_radius;
    let dir = Vec2::new(c, s).scale(config.grip_offset);
    let mut best = f64::NEG_INFINITY;
    for sx in [-1.0, 1.0] {
        for sy in [-1.0, 1.0] {
            let center = Vec2::new(sx * (hw - ext_x), sy * (hl - ext_y));
            let grip = center.add(dir);
            for cx in [-can_x, can_x] {
                for cy in [-can_y, can_y] {
                    best = best.max(grip.distance(Vec2::new(cx, cy)));
                }
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_config_builds() {
        let config = ArenaConfig::default();
        assert_eq!(config.lidar_rays, 128);
        assert!(config.d_max() > 3.0 && config.d_max() < 3.3, "d_max = {}", config.d_max());
    }

    #[test]
    fn reset_is_deterministic() {
        let config = ArenaConfig::default();
        let a = reset(42, &config).unwrap();
        let b = reset(42, &config).unwrap();
        assert_eq!(a, b);
        let c = reset(43, &config).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn reset_rejects_oversized_robot() {
        let params = ArenaParams {
            robot_half_len: 2.0,
            robot_half_wid: 2.0,
            ..ArenaParams::default()
        };
        // Oversized extents already fail travel validation; bypass by building
        // a small arena directly.
        let config = params.build();
        match config {
            Err(_) => {}
            Ok(config) => {
                assert!(matches!(reset(1, &config), Err(Error::Placement { .. })));
            }
        }
    }

    #[test]
    fn reset_placements_are_collision_free() {
        let config = ArenaConfig::default();
        for seed in 0..200 {
            let s = reset(seed, &config).unwrap();
            assert!(config.footprint_inside(s.robot));
            assert!(config.can_inside(s.can));
            assert!(config.footprint(s.robot).distance_to_point(s.can) > config.can_radius);
            assert_eq!(s.steps_elapsed, 0);
        }
    }

    #[test]
    fn grip_target_follows_heading() {
        let config = ArenaConfig::default();
        let g = grip_target(Pose2D::new(0.0, 0.0, 0.0), &config);
        assert!(g.distance(Vec2::new(0.4, 0.0)) < 1e-12);
        let g = grip_target(Pose2D::new(0.0, 0.0, PI / 2.0), &config);
        assert!(g.distance(Vec2::new(0.0, 0.4)) < 1e-12);
        let d = config.grip_offset;
        let g = grip_target(Pose2D::new(1.0, 1.0, PI / 4.0), &config);
        let expect = Vec2::new(1.0 + d * 0.5f64.sqrt(), 1.0 + d * 0.5f64.sqrt());
        assert!(g.distance(expect) < 1e-12);
    }

    #[test]
    fn move_forward_advances_along_heading() {
        let config = ArenaConfig::default();
        let state = WorldState {
            robot: Pose2D::new(0.0, 0.0, 0.3),
            can: Vec2::new(0.5, 0.9),
            steps_elapsed: 0,
        };
        let (next, res) = step(&state, Action::MoveForward, &config);
        let expect = Vec2::new(config.translation_step * 0.3f64.cos(), config.translation_step * 0.3f64.sin());
        assert!(next.robot.position().distance(expect) < 1e-12);
        assert_eq!(next.robot.heading, 0.3);
        assert_eq!(next.steps_elapsed, 1);
        assert!(!res.terminal);
        assert!((res.reward - reward(&next, &config)).abs() < 1e-15);
    }

    #[test]
    fn grip_on_target_succeeds_with_zero_reward() {
        let config = ArenaConfig::default();
        let robot = Pose2D::new(0.0, -0.5, PI / 2.0);
        let state = WorldState {
            robot,
            can: grip_target(robot, &config),
            steps_elapsed: 3,
        };
        let (_, res) = step(&state, Action::Grip, &config);
        assert_eq!(res.cause, TerminationCause::GripSuccess);
        assert!(res.terminal);
        assert!(res.reward.abs() < 1e-12);
    }

    #[test]
    fn grip_off_target_fails_with_state_reward() {
        let config = ArenaConfig::default();
        let state = WorldState {
            robot: Pose2D::new(0.0, 0.0, 0.0),
            can: Vec2::new(-0.5, 0.7),
            steps_elapsed: 0,
        };
        let (next, res) = step(&state, Action::Grip, &config);
        assert_eq!(res.cause, TerminationCause::GripFailure);
        assert!(res.terminal);
        assert!((res.reward - reward(&next, &config)).abs() < 1e-15);
        assert!(res.reward < -1e-3);
    }

    #[test]
    fn wall_collision_gives_minus_one_and_blocks() {
        let config = ArenaConfig::default();
        // Flush against the +x wall, facing it.
        let robot = Pose2D::new(config.half_width() - config.robot_half_len, 0.0, 0.0);
        let state = WorldState {
            robot,
            can: Vec2::new(-0.5, -0.5),
            steps_elapsed: 0,
        };
        let (next, res) = step(&state, Action::MoveForward, &config);
        assert_eq!(res.cause, TerminationCause::Collision);
        assert_eq!(res.reward, -1.0);
        assert!(res.terminal);
        assert_eq!(next.robot, robot, "collision must not move the robot");
    }

    #[test]
    fn can_collision_terminates() {
        let config = ArenaConfig::default();
        let robot = Pose2D::new(0.0, 0.0, 0.0);
        let can = Vec2::new(config.robot_half_len + config.can_radius + 0.01, 0.0);
        let state = WorldState { robot, can, steps_elapsed: 0 };
        let (_, res) = step(&state, Action::MoveForward, &config);
        assert_eq!(res.cause, TerminationCause::Collision);
        assert_eq!(res.reward, -1.0);
    }

    #[test]
    fn step_cap_terminates() {
        let config = ArenaConfig::default();
        let mut state = WorldState {
            robot: Pose2D::new(0.0, 0.0, 0.0),
            can: Vec2::new(0.5, 0.9),
            steps_elapsed: 0,
        };
        let mut last_cause = TerminationCause::Running;
        for _ in 0..config.max_steps {
            let (next, res) = step(&state, Action::RotateCcw, &config);
            state = next;
            last_cause = res.cause;
            if res.terminal {
                break;
            }
        }
        assert_eq!(last_cause, TerminationCause::StepCap);
        assert_eq!(state.steps_elapsed, config.max_steps);
    }

    #[test]
    fn reward_extremes() {
        let config = ArenaConfig::default();
        // Can exactly at the grip target.
        let robot = Pose2D::new(0.0, 0.0, 1.1);
        let state = WorldState {
            robot,
            can: grip_target(robot, &config),
            steps_elapsed: 0,
        };
        assert_eq!(reward(&state, &config), 0.0);

        // Half of the maximum distance.
        let robot = Pose2D::new(0.0, 0.0, 0.0);
        let g = grip_target(robot, &config);
        let state = WorldState {
            robot,
            can: Vec2::new(g.x - config.d_max() / 2.0 / 2f64.sqrt(), g.y + config.d_max() / 2.0 / 2f64.sqrt()),
            steps_elapsed: 0,
        };
        assert!((reward(&state, &config) + 0.5).abs() < 1e-12);
    }

    #[test]
    fn opposite_corner_reward_is_minus_one() {
        let config = ArenaConfig::default();
        // Robot flush in the (-x, -y) corner facing the -y wall; grip target
        // extends past the wall. Can in the opposite corner.
        let robot = Pose2D::new(
            -(config.half_width() - config.robot_half_wid),
            -(config.half_length() - config.robot_half_len),
            -PI / 2.0,
        );
        assert!(config.footprint_inside(robot));
        let can = Vec2::new(
            config.half_width() - config.can_radius,
            config.half_length() - config.can_radius,
        );
        let state = WorldState { robot, can, steps_elapsed: 0 };
        assert!((reward(&state, &config) + 1.0).abs() < 1e-9);
    }

    #[test]
    fn observe_masks_zero_scans() {
        let config = ArenaConfig::default();
        let state = reset(7, &config).unwrap();
        let full = observe(&state, [true, true, true], &config);
        assert!(full.scans.iter().all(|s| !s.is_all_zero()));

        let masked = observe(&state, [true, false, false], &config);
        assert!(!masked.scans[0].is_all_zero());
        assert!(masked.scans[1].is_all_zero());
        assert!(masked.scans[2].is_all_zero());
        assert_eq!(masked.available, [true, false, false]);
        assert_eq!(full.with_availability([true, false, false]), masked);
    }

    #[test]
    fn observe_is_pure() {
        let config = ArenaConfig::default();
        let state = reset(11, &config).unwrap();
        let a = observe(&state, [true, true, true], &config);
        let b = observe(&state, [true, true, true], &config);
        assert_eq!(a, b);
    }

    #[test]
    #[should_panic(expected = "hard-wired")]
    fn observe_requires_robot_sensor() {
        let config = ArenaConfig::default();
        let state = reset(3, &config).unwrap();
        let _ = observe(&state, [false, true, true], &config);
    }
}
