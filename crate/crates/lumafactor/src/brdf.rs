//! Simplified Disney/Cook-Torrance BRDF: evaluation, importance sampling,
//! and analytic derivatives with respect to the material parameters.
//!
//! The model is `f_r = (1 - m) * a / pi + f_s` with a GGX specular lobe
//! `f_s = D * G * F / (4 (n.wi)(n.wo))`:
//!
//! * `D` — GGX normal distribution with `alpha = r^2`,
//! * `G` — separable Smith with the Schlick-GGX masking term, `k = alpha / 2`,
//! * `F` — Schlick Fresnel with `F0 = 0.04 (1 - m) + a m`.
//!
//! Roughness is floored at [`R_MIN`] before use so the lobe stays integrable
//! by Monte Carlo; inside the clamped region the roughness derivative is zero.

use crate::math::{cosine_sample_hemisphere, reflect, spherical_dir, Onb, Vec3};

/// Roughness floor applied before converting to GGX alpha.
pub const R_MIN: f64 = 0.04;

/// Dielectric base reflectance used in the Fresnel F0 mix.
pub const DIELECTRIC_F0: f64 = 0.04;

/// Material parameters at a shading point. Components are clamped to [0,1]
/// on construction.
#[derive(Debug, Clone, Copy)]
pub struct MaterialSample {
    pub albedo: Vec3,
    pub roughness: f64,
    pub metallic: f64,
}

impl MaterialSample {
    pub fn new(albedo: Vec3, roughness: f64, metallic: f64) -> MaterialSample {
        MaterialSample {
            albedo: albedo.clamp01(),
            roughness: roughness.clamp(0.0, 1.0),
            metallic: metallic.clamp(0.0, 1.0),
        }
    }

    /// Fresnel reflectance at normal incidence.
    pub fn f0(&self) -> Vec3 {
        Vec3::splat(DIELECTRIC_F0 * (1.0 - self.metallic)) + self.albedo * self.metallic
    }

    fn alpha(&self) -> f64 {
        let r = self.roughness.max(R_MIN);
        r * r
    }
}

/// Unit directions at a shading point, all in world space and pointing away
/// from the surface.
#[derive(Debug, Clone, Copy)]
pub struct ShadingFrame {
    pub normal: Vec3,
    pub incoming: Vec3,
    pub outgoing: Vec3,
}

impl ShadingFrame {
    pub fn new(normal: Vec3, incoming: Vec3, outgoing: Vec3) -> ShadingFrame {
        debug_assert!((normal.length() - 1.0).abs() < 1e-6);
        debug_assert!((incoming.length() - 1.0).abs() < 1e-6);
        debug_assert!((outgoing.length() - 1.0).abs() < 1e-6);
        ShadingFrame {
            normal,
            incoming,
            outgoing,
        }
    }

    fn swapped(self) -> ShadingFrame {
        ShadingFrame {
            normal: self.normal,
            incoming: self.outgoing,
            outgoing: self.incoming,
        }
    }
}

/// Which lobe produced a sampled direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lobe {
    Diffuse,
    Specular,
}

/// A direction drawn from the BRDF with its pdf. `pdf == 0` marks a rejected
/// sample (below the hemisphere); the caller discards it.
#[derive(Debug, Clone, Copy)]
pub struct BrdfSample {
    pub direction: Vec3,
    pub pdf: f64,
    pub lobe: Lobe,
}

#[inline]
fn ggx_d(alpha: f64, n_dot_h: f64) -> f64 {
    if n_dot_h <= 0.0 {
        return 0.0;
    }
    let a2 = alpha * alpha;
    let t = n_dot_h * n_dot_h * (a2 - 1.0) + 1.0;
    a2 / (std::f64::consts::PI * t * t)
}

#[inline]
fn smith_g1(k: f64, n_dot_v: f64) -> f64 {
    n_dot_v / (n_dot_v * (1.0 - k) + k)
}

#[inline]
fn schlick_weight(cos_d: f64) -> f64 {
    let m = (1.0 - cos_d).clamp(0.0, 1.0);
    m * m * m * m * m
}

struct SpecularTerms {
    d: f64,
    g: f64,
    fresnel: Vec3,
    n_dot_h: f64,
    h_dot_o: f64,
    g1_i: f64,
    g1_o: f64,
}

fn specular_terms(mat: &MaterialSample, frame: &ShadingFrame) -> Option<SpecularTerms> {
    let n = frame.normal;
    let cos_i = n.dot(frame.incoming);
    let cos_o = n.dot(frame.outgoing);
    if cos_i <= 0.0 || cos_o <= 0.0 {
        return None;
    }
    let h = (frame.incoming + frame.outgoing).normalized();
    let n_dot_h = n.dot(h).clamp(0.0, 1.0);
    let h_dot_o = h.dot(frame.outgoing).clamp(0.0, 1.0);
    let alpha = mat.alpha();
    let k = alpha / 2.0;
    let g1_i = smith_g1(k, cos_i);
    let g1_o = smith_g1(k, cos_o);
    let f0 = mat.f0();
    let w = schlick_weight(h_dot_o);
    let fresnel = f0 + (Vec3::ONE - f0) * w;
    Some(SpecularTerms {
        d: ggx_d(alpha, n_dot_h),
        g: g1_i * g1_o,
        fresnel,
        n_dot_h,
        h_dot_o,
        g1_i,
        g1_o,
    })
}

/// Evaluate the BRDF for light arriving along `frame.incoming` and leaving
/// along `frame.outgoing`. Returns zero if either direction is below the
/// hemisphere. `specular_enabled = false` drops the microfacet lobe entirely,
/// leaving the pure Lambertian term.
pub fn eval_brdf(mat: &MaterialSample, frame: &ShadingFrame, specular_enabled: bool) -> Vec3 {
    let cos_i = frame.normal.dot(frame.incoming);
    let cos_o = frame.normal.dot(frame.outgoing);
    if cos_i <= 0.0 || cos_o <= 0.0 {
        return Vec3::ZERO;
    }
    let diffuse = mat.albedo * ((1.0 - mat.metallic) / std::f64::consts::PI);
    if !specular_enabled {
        return diffuse;
    }
    let Some(terms) = specular_terms(mat, frame) else {
        return diffuse;
    };
    let scale = terms.d * terms.g / (4.0 * cos_i * cos_o);
    diffuse + terms.fresnel * scale
}

/// Evaluate the BRDF for both direction orders, for reciprocity testing.
pub fn brdf_reciprocity_pair(
    mat: &MaterialSample,
    frame: &ShadingFrame,
    specular_enabled: bool,
) -> (Vec3, Vec3) {
    (
        eval_brdf(mat, frame, specular_enabled),
        eval_brdf(mat, &frame.swapped(), specular_enabled),
    )
}

/// Probability of picking the specular lobe when sampling. Kept strictly
/// interior so both lobes remain explorable.
pub fn specular_select_probability(mat: &MaterialSample) -> f64 {
    (mat.metallic + mat.f0().mean()).clamp(0.1, 0.9)
}

/// Draw an incoming direction from a lobe-mixture importance distribution.
///
/// The first uniform both selects the lobe and is rescaled for reuse inside
/// it, so a `(u1, u2)` pair drives the whole draw. The returned pdf matches
/// [`brdf_pdf`] exactly.
pub fn sample_brdf_direction(
    mat: &MaterialSample,
    outgoing: Vec3,
    normal: Vec3,
    u: (f64, f64),
    specular_enabled: bool,
) -> BrdfSample {
    debug_assert!(normal.dot(outgoing) > 0.0);
    let onb = Onb::from_normal(normal);
    if !specular_enabled {
        let local = cosine_sample_hemisphere(u.0, u.1);
        let dir = onb.to_world(local);
        return BrdfSample {
            direction: dir,
            pdf: cosine_pdf(normal, dir),
            lobe: Lobe::Diffuse,
        };
    }
    let p_spec = specular_select_probability(mat);
    let (lobe, u1) = if u.0 < p_spec {
        (Lobe::Specular, u.0 / p_spec)
    } else {
        (Lobe::Diffuse, (u.0 - p_spec) / (1.0 - p_spec))
    };
    let direction = match lobe {
        Lobe::Diffuse => onb.to_world(cosine_sample_hemisphere(u1, u.1)),
        Lobe::Specular => {
            // Sample the GGX NDF (half-vector), then reflect the view ray.
            let alpha = mat.alpha();
            let theta = (alpha * (u1 / (1.0 - u1)).sqrt()).atan();
            let phi = 2.0 * std::f64::consts::PI * u.1;
            let h = onb.to_world(spherical_dir(theta, phi));
            reflect(outgoing, h)
        }
    };
    if normal.dot(direction) <= 0.0 {
        return BrdfSample {
            direction,
            pdf: 0.0,
            lobe,
        };
    }
    BrdfSample {
        direction,
        pdf: brdf_pdf(mat, outgoing, normal, direction, specular_enabled),
        lobe,
    }
}

#[inline]
fn cosine_pdf(normal: Vec3, dir: Vec3) -> f64 {
    normal.dot(dir).max(0.0) / std::f64::consts::PI
}

/// Pdf of [`sample_brdf_direction`] for an arbitrary direction; zero below
/// the hemisphere.
pub fn brdf_pdf(
    mat: &MaterialSample,
    outgoing: Vec3,
    normal: Vec3,
    incoming: Vec3,
    specular_enabled: bool,
) -> f64 {
    let cos_i = normal.dot(incoming);
    if cos_i <= 0.0 || normal.dot(outgoing) <= 0.0 {
        return 0.0;
    }
    let diffuse_pdf = cos_i / std::f64::consts::PI;
    if !specular_enabled {
        return diffuse_pdf;
    }
    let p_spec = specular_select_probability(mat);
    let h = (incoming + outgoing).normalized();
    let n_dot_h = normal.dot(h).max(0.0);
    let h_dot_o = h.dot(outgoing).max(1e-12);
    // NDF sampling: p(wi) = D(h) (n.h) / (4 (h.wo)).
    let spec_pdf = ggx_d(mat.alpha(), n_dot_h) * n_dot_h / (4.0 * h_dot_o);
    p_spec * spec_pdf + (1.0 - p_spec) * diffuse_pdf
}

/// Analytic partial derivatives of [`eval_brdf`] with respect to the material
/// parameters, matching the expression (including clamps) exactly.
#[derive(Debug, Clone, Copy)]
pub struct BrdfGradients {
    /// d f_r[c] / d albedo[c]; off-diagonal albedo terms are zero.
    pub d_albedo: Vec3,
    pub d_roughness: Vec3,
    pub d_metallic: Vec3,
}

pub fn eval_brdf_gradients(
    mat: &MaterialSample,
    frame: &ShadingFrame,
    specular_enabled: bool,
) -> BrdfGradients {
    let zero = BrdfGradients {
        d_albedo: Vec3::ZERO,
        d_roughness: Vec3::ZERO,
        d_metallic: Vec3::ZERO,
    };
    let cos_i = frame.normal.dot(frame.incoming);
    let cos_o = frame.normal.dot(frame.outgoing);
    if cos_i <= 0.0 || cos_o <= 0.0 {
        return zero;
    }
    let inv_pi = 1.0 / std::f64::consts::PI;
    let one_minus_m = 1.0 - mat.metallic;
    let mut d_albedo = Vec3::splat(one_minus_m * inv_pi);
    let mut d_roughness = Vec3::ZERO;
    let mut d_metallic = mat.albedo * (-inv_pi);
    if specular_enabled {
        if let Some(terms) = specular_terms(mat, frame) {
            let denom = 4.0 * cos_i * cos_o;
            let scale = terms.d * terms.g / denom;
            let w = schlick_weight(terms.h_dot_o);
            // F = F0 + (1 - F0) w, F0 = 0.04 (1 - m) + a m.
            // dF/dF0 = 1 - w; dF0/da = m; dF0/dm = a - 0.04.
            let df_df0 = 1.0 - w;
            d_albedo += Vec3::splat(scale * df_df0 * mat.metallic);
            d_metallic += (mat.albedo - Vec3::splat(DIELECTRIC_F0)) * (scale * df_df0);
            // Roughness enters through alpha = r^2 in D and k = alpha/2 in G.
            if mat.roughness > R_MIN {
                let alpha = mat.alpha();
                let a2 = alpha * alpha;
                let nh2 = terms.n_dot_h * terms.n_dot_h;
                let t = nh2 * (a2 - 1.0) + 1.0;
                // dD/dalpha = (2 alpha t - 4 alpha^3 nh2) / (pi t^3)
                let dd_dalpha =
                    (2.0 * alpha * t - 4.0 * alpha * a2 * nh2) / (std::f64::consts::PI * t * t * t);
                // G1 = c / (c (1-k) + k); dG1/dk = -c(1-c) / (c + k(1-c))^2
                let k = alpha / 2.0;
                let dg1 = |c: f64| -> f64 {
                    let d = c + k * (1.0 - c);
                    -c * (1.0 - c) / (d * d)
                };
                let dg_dk = dg1(cos_i) * terms.g1_o + terms.g1_i * dg1(cos_o);
                let dg_dalpha = dg_dk * 0.5;
                let dspec_dalpha = (dd_dalpha * terms.g + terms.d * dg_dalpha) / denom;
                let dalpha_dr = 2.0 * mat.roughness;
                d_roughness = terms.fresnel * (dspec_dalpha * dalpha_dr);
            }
        }
    }
    BrdfGradients {
        d_albedo,
        d_roughness,
        d_metallic,
    }
}
