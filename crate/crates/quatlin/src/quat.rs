//! Quaternion value types.
//!
//! Components use the scalar-first ordering `(w, x, y, z)` throughout the
//! crate, including the 4-vector view and every file format built on it.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

/// A quaternion `w + xi + yj + zk` over `f64`.
///
/// Constructors reject non-finite components: rank decisions made downstream
/// are meaningless once a NaN has slipped into a coefficient.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

/// A quaternion with zero scalar part.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PureQuaternion {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion { w: 0.0, x: 0.0, y: 0.0, z: 0.0 };
    pub const ONE: Quaternion = Quaternion { w: 1.0, x: 0.0, y: 0.0, z: 0.0 };
    pub const I: Quaternion = Quaternion { w: 0.0, x: 1.0, y: 0.0, z: 0.0 };
    pub const J: Quaternion = Quaternion { w: 0.0, x: 0.0, y: 1.0, z: 0.0 };
    pub const K: Quaternion = Quaternion { w: 0.0, x: 0.0, y: 0.0, z: 1.0 };

    /// Create a quaternion from its four components.
    ///
    /// Panics if any component is NaN or infinite.
    #[inline]
    pub fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        assert!(
            w.is_finite() && x.is_finite() && y.is_finite() && z.is_finite(),
            "quaternion components must be finite, got ({w}, {x}, {y}, {z})"
        );
        Self { w, x, y, z }
    }

    /// The real scalar `s` as a quaternion `s + 0i + 0j + 0k`.
    #[inline]
    pub fn real(s: f64) -> Self {
        Self::new(s, 0.0, 0.0, 0.0)
    }

    /// The component 4-vector `(w, x, y, z)`.
    #[inline]
    pub fn as_vector(self) -> [f64; 4] {
        [self.w, self.x, self.y, self.z]
    }

    /// Rebuild a quaternion from its component 4-vector.
    #[inline]
    pub fn from_vector(v: [f64; 4]) -> Self {
        Self::new(v[0], v[1], v[2], v[3])
    }

    /// Conjugate: flips the sign of the vector part.
    #[inline]
    pub fn conjugate(self) -> Self {
        Self { w: self.w, x: -self.x, y: -self.y, z: -self.z }
    }

    /// Euclidean norm of the component 4-vector.
    #[inline]
    pub fn norm(self) -> f64 {
        (self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    /// Componentwise scaling by a real factor.
    #[inline]
    pub fn scale(self, s: f64) -> Self {
        Self { w: self.w * s, x: self.x * s, y: self.y * s, z: self.z * s }
    }

    /// True when every component is exactly zero.
    #[inline]
    pub fn is_zero(self) -> bool {
        self.w == 0.0 && self.x == 0.0 && self.y == 0.0 && self.z == 0.0
    }

    /// Drops the scalar part, keeping the vector part.
    #[inline]
    pub fn vector_part(self) -> PureQuaternion {
        PureQuaternion { x: self.x, y: self.y, z: self.z }
    }
}

impl PureQuaternion {
    pub const ZERO: PureQuaternion = PureQuaternion { x: 0.0, y: 0.0, z: 0.0 };

    /// Create a pure quaternion `xi + yj + zk`.
    ///
    /// Panics if any component is NaN or infinite.
    #[inline]
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        assert!(
            x.is_finite() && y.is_finite() && z.is_finite(),
            "pure quaternion components must be finite, got ({x}, {y}, {z})"
        );
        Self { x, y, z }
    }

    /// The component 3-vector `(x, y, z)`.
    #[inline]
    pub fn as_vector(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    /// Rebuild a pure quaternion from its component 3-vector.
    #[inline]
    pub fn from_vector(v: [f64; 3]) -> Self {
        Self::new(v[0], v[1], v[2])
    }

    /// View as a full quaternion with zero scalar part.
    #[inline]
    pub fn as_quaternion(self) -> Quaternion {
        Quaternion { w: 0.0, x: self.x, y: self.y, z: self.z }
    }
}

impl From<PureQuaternion> for Quaternion {
    fn from(p: PureQuaternion) -> Self {
        p.as_quaternion()
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    #[inline]
    fn add(self, rhs: Quaternion) -> Quaternion {
        Quaternion {
            w: self.w + rhs.w,
            x: self.x + rhs.x,
            y: self.y + rhs.y,
            z: self.z + rhs.z,
        }
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    #[inline]
    fn sub(self, rhs: Quaternion) -> Quaternion {
        Quaternion {
            w: self.w - rhs.w,
            x: self.x - rhs.x,
            y: self.y - rhs.y,
            z: self.z - rhs.z,
        }
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    #[inline]
    fn neg(self) -> Quaternion {
        Quaternion { w: -self.w, x: -self.x, y: -self.y, z: -self.z }
    }
}

/// Hamilton product under `i² = j² = k² = ijk = −1`.
impl Mul for Quaternion {
    type Output = Quaternion;
    #[inline]
    fn mul(self, rhs: Quaternion) -> Quaternion {
        let a = self;
        let b = rhs;
        Quaternion {
            w: a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            x: a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            y: a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            z: a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
        }
    }
}

impl Mul<f64> for Quaternion {
    type Output = Quaternion;
    #[inline]
    fn mul(self, s: f64) -> Quaternion {
        self.scale(s)
    }
}

impl Mul<Quaternion> for f64 {
    type Output = Quaternion;
    #[inline]
    fn mul(self, q: Quaternion) -> Quaternion {
        q.scale(self)
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}i + {}j + {}k", self.w, self.x, self.y, self.z)
    }
}
