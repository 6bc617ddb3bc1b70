//! Small vector math used by the shading and geometry code.
//!
//! Shading math runs in `f64` so that finite-difference gradient checks are
//! not dominated by roundoff; image storage stays `f32`.

use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// 3-component vector / point / RGB triple in `f64`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

pub const fn vec3(x: f64, y: f64, z: f64) -> Vec3 {
    Vec3 { x, y, z }
}

impl Vec3 {
    pub const ZERO: Vec3 = vec3(0.0, 0.0, 0.0);
    pub const ONE: Vec3 = vec3(1.0, 1.0, 1.0);

    pub fn splat(v: f64) -> Vec3 {
        vec3(v, v, v)
    }

    pub fn dot(self, o: Vec3) -> f64 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(self, o: Vec3) -> Vec3 {
        vec3(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    pub fn length_squared(self) -> f64 {
        self.dot(self)
    }

    pub fn length(self) -> f64 {
        self.length_squared().sqrt()
    }

    pub fn normalized(self) -> Vec3 {
        self / self.length()
    }

    /// Componentwise product (used for RGB throughput).
    pub fn mul_elem(self, o: Vec3) -> Vec3 {
        vec3(self.x * o.x, self.y * o.y, self.z * o.z)
    }

    pub fn div_elem(self, o: Vec3) -> Vec3 {
        vec3(self.x / o.x, self.y / o.y, self.z / o.z)
    }

    pub fn min_elem(self, o: Vec3) -> Vec3 {
        vec3(self.x.min(o.x), self.y.min(o.y), self.z.min(o.z))
    }

    pub fn max_elem(self, o: Vec3) -> Vec3 {
        vec3(self.x.max(o.x), self.y.max(o.y), self.z.max(o.z))
    }

    pub fn max_component(self) -> f64 {
        self.x.max(self.y).max(self.z)
    }

    pub fn mean(self) -> f64 {
        (self.x + self.y + self.z) / 3.0
    }

    pub fn clamp01(self) -> Vec3 {
        vec3(
            self.x.clamp(0.0, 1.0),
            self.y.clamp(0.0, 1.0),
            self.z.clamp(0.0, 1.0),
        )
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    pub fn to_array_f32(self) -> [f32; 3] {
        [self.x as f32, self.y as f32, self.z as f32]
    }

    pub fn from_array_f32(a: [f32; 3]) -> Vec3 {
        vec3(a[0] as f64, a[1] as f64, a[2] as f64)
    }

    pub fn get(self, c: usize) -> f64 {
        match c {
            0 => self.x,
            1 => self.y,
            _ => self.z,
        }
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, o: Vec3) -> Vec3 {
        vec3(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl AddAssign for Vec3 {
    fn add_assign(&mut self, o: Vec3) {
        *self = *self + o;
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, o: Vec3) -> Vec3 {
        vec3(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        vec3(-self.x, -self.y, -self.z)
    }
}

impl Mul<f64> for Vec3 {
    type Output = Vec3;
    fn mul(self, s: f64) -> Vec3 {
        vec3(self.x * s, self.y * s, self.z * s)
    }
}

impl Mul<Vec3> for f64 {
    type Output = Vec3;
    fn mul(self, v: Vec3) -> Vec3 {
        v * self
    }
}

impl Div<f64> for Vec3 {
    type Output = Vec3;
    fn div(self, s: f64) -> Vec3 {
        vec3(self.x / s, self.y / s, self.z / s)
    }
}

/// Orthonormal basis around a unit normal, for local/world frame changes.
#[derive(Debug, Clone, Copy)]
pub struct Onb {
    pub tangent: Vec3,
    pub bitangent: Vec3,
    pub normal: Vec3,
}

impl Onb {
    /// Branchless basis construction (Duff et al. 2017).
    pub fn from_normal(n: Vec3) -> Onb {
        let sign = 1.0_f64.copysign(n.z);
        let a = -1.0 / (sign + n.z);
        let b = n.x * n.y * a;
        Onb {
            tangent: vec3(1.0 + sign * n.x * n.x * a, sign * b, -sign * n.x),
            bitangent: vec3(b, sign + n.y * n.y * a, -n.y),
            normal: n,
        }
    }

    pub fn to_world(&self, local: Vec3) -> Vec3 {
        self.tangent * local.x + self.bitangent * local.y + self.normal * local.z
    }
}

/// Reflect `v` about the unit vector `axis` (both pointing away from the surface).
pub fn reflect(v: Vec3, axis: Vec3) -> Vec3 {
    axis * (2.0 * v.dot(axis)) - v
}

/// Map two uniforms to a cosine-weighted direction in the local +z hemisphere.
pub fn cosine_sample_hemisphere(u1: f64, u2: f64) -> Vec3 {
    let r = u1.sqrt();
    let phi = 2.0 * std::f64::consts::PI * u2;
    let x = r * phi.cos();
    let y = r * phi.sin();
    let z = (1.0 - u1).max(0.0).sqrt();
    vec3(x, y, z)
}

/// Spherical direction from polar angle `theta` (from +z) and azimuth `phi` (from +x).
pub fn spherical_dir(theta: f64, phi: f64) -> Vec3 {
    let st = theta.sin();
    vec3(st * phi.cos(), st * phi.sin(), theta.cos())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn onb_is_orthonormal() {
        let dirs = [
            vec3(0.0, 0.0, 1.0),
            vec3(0.0, 0.0, -1.0),
            vec3(1.0, 0.0, 0.0),
            vec3(0.3, -0.5, 0.81).normalized(),
        ];
        for n in dirs {
            let onb = Onb::from_normal(n);
            assert!(onb.tangent.dot(onb.bitangent).abs() < 1e-12);
            assert!(onb.tangent.dot(onb.normal).abs() < 1e-12);
            assert!((onb.tangent.length() - 1.0).abs() < 1e-12);
            assert!((onb.bitangent.length() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn reflect_mirrors_about_axis() {
        let n = vec3(0.0, 0.0, 1.0);
        let v = vec3(0.3, 0.4, 0.866).normalized();
        let r = reflect(v, n);
        assert!((r.x + v.x).abs() < 1e-12);
        assert!((r.y + v.y).abs() < 1e-12);
        assert!((r.z - v.z).abs() < 1e-12);
    }

    #[test]
    fn cosine_sample_is_unit_and_upper() {
        for i in 0..100 {
            let u1 = i as f64 / 100.0;
            let u2 = (i as f64 * 0.37) % 1.0;
            let d = cosine_sample_hemisphere(u1, u2);
            assert!((d.length() - 1.0).abs() < 1e-9);
            assert!(d.z >= 0.0);
        }
    }
}
