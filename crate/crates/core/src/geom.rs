//! 2D geometry primitives shared by the simulator and its tests.

use std::f64::consts::PI;

/// Point or displacement in the arena plane, in meters.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn add(self, other: Vec2) -> Vec2 {
        Vec2::new(self.x + other.x, self.y + other.y)
    }

    pub fn sub(self, other: Vec2) -> Vec2 {
        Vec2::new(self.x - other.x, self.y - other.y)
    }

    pub fn scale(self, k: f64) -> Vec2 {
        Vec2::new(self.x * k, self.y * k)
    }

    pub fn dot(self, other: Vec2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// 2D cross product (z component).
    pub fn cross(self, other: Vec2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn distance(self, other: Vec2) -> f64 {
        self.sub(other).norm()
    }

    /// Unit vector at the given angle.
    pub fn unit(angle: f64) -> Vec2 {
        Vec2::new(angle.cos(), angle.sin())
    }

    /// Rotate by `angle` radians counterclockwise.
    pub fn rotated(self, angle: f64) -> Vec2 {
        let (s, c) = angle.sin_cos();
        Vec2::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }
}

/// Robot pose: position of the base center plus heading.
///
/// The heading is always kept wrapped into `[-pi, pi)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Pose2D {
    pub x: f64,
    pub y: f64,
    pub heading: f64,
}

impl Pose2D {
    pub fn new(x: f64, y: f64, heading: f64) -> Self {
        Self {
            x,
            y,
            heading: wrap_angle(heading),
        }
    }

    pub fn position(&self) -> Vec2 {
        Vec2::new(self.x, self.y)
    }

    /// Map a body-frame point (x forward along the heading, y to the left)
    /// into the world frame.
    pub fn body_to_world(&self, local: Vec2) -> Vec2 {
        self.position().add(local.rotated(self.heading))
    }

    /// Map a world-frame point into the body frame.
    pub fn world_to_body(&self, world: Vec2) -> Vec2 {
        world.sub(self.position()).rotated(-self.heading)
    }
}

/// Wrap an angle into `[-pi, pi)`.
pub fn wrap_angle(a: f64) -> f64 {
    let wrapped = (a + PI).rem_euclid(2.0 * PI) - PI;
    // rem_euclid can yield exactly 2*pi for inputs just below -pi due to
    // rounding; fold that back.
    if wrapped >= PI {
        wrapped - 2.0 * PI
    } else {
        wrapped
    }
}

/// Oriented rectangle given by a pose and half extents in the body frame.
#[derive(Debug, Clone, Copy)]
pub struct OrientedRect {
    pub pose: Pose2D,
    /// Half extent along the body x axis (heading direction).
    pub half_len: f64,
    /// Half extent along the body y axis.
    pub half_wid: f64,
}

impl OrientedRect {
    pub fn new(pose: Pose2D, half_len: f64, half_wid: f64) -> Self {
        Self {
            pose,
            half_len,
            half_wid,
        }
    }

    /// Corners in counterclockwise order.
    pub fn corners(&self) -> [Vec2; 4] {
        let hl = self.half_len;
        let hw = self.half_wid;
        [
            self.pose.body_to_world(Vec2::new(hl, hw)),
            self.pose.body_to_world(Vec2::new(-hl, hw)),
            self.pose.body_to_world(Vec2::new(-hl, -hw)),
            self.pose.body_to_world(Vec2::new(hl, -hw)),
        ]
    }

    /// Edges as corner pairs, counterclockwise.
    pub fn edges(&self) -> [(Vec2, Vec2); 4] {
        let c = self.corners();
        [(c[0], c[1]), (c[1], c[2]), (c[2], c[3]), (c[3], c[0])]
    }

    /// Euclidean distance from a point to the rectangle (0 inside).
    pub fn distance_to_point(&self, point: Vec2) -> f64 {
        let local = self.pose.world_to_body(point);
        let dx = (local.x.abs() - self.half_len).max(0.0);
        let dy = (local.y.abs() - self.half_wid).max(0.0);
        dx.hypot(dy)
    }

    pub fn contains(&self, point: Vec2) -> bool {
        let local = self.pose.world_to_body(point);
        local.x.abs() <= self.half_len && local.y.abs() <= self.half_wid
    }
}
