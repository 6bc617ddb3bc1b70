//! Row-major float image/grid container shared by textures, environment maps,
//! render buffers and latents.

use serde::{Deserialize, Serialize};

use crate::math::Vec3;
use crate::{Error, Result};

/// A `width x height x channels` grid of `f32`, row-major, row 0 at the top.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ImageBuf {
    width: usize,
    height: usize,
    channels: usize,
    data: Vec<f32>,
}

impl ImageBuf {
    pub fn new(width: usize, height: usize, channels: usize) -> ImageBuf {
        ImageBuf {
            width,
            height,
            channels,
            data: vec![0.0; width * height * channels],
        }
    }

    pub fn from_fill(width: usize, height: usize, channels: usize, value: f32) -> ImageBuf {
        ImageBuf {
            width,
            height,
            channels,
            data: vec![value; width * height * channels],
        }
    }

    pub fn from_data(width: usize, height: usize, channels: usize, data: Vec<f32>) -> Result<ImageBuf> {
        if data.len() != width * height * channels {
            return Err(Error::Shape(format!(
                "buffer data length {} does not match {}x{}x{}",
                data.len(),
                width,
                height,
                channels
            )));
        }
        Ok(ImageBuf {
            width,
            height,
            channels,
            data,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn channels(&self) -> usize {
        self.channels
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn data(&self) -> &[f32] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [f32] {
        &mut self.data
    }

    pub fn same_shape(&self, o: &ImageBuf) -> bool {
        self.width == o.width && self.height == o.height && self.channels == o.channels
    }

    #[inline]
    pub fn idx(&self, x: usize, y: usize, c: usize) -> usize {
        (y * self.width + x) * self.channels + c
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize, c: usize) -> f32 {
        self.data[(y * self.width + x) * self.channels + c]
    }

    #[inline]
    pub fn set(&mut self, x: usize, y: usize, c: usize, v: f32) {
        let i = self.idx(x, y, c);
        self.data[i] = v;
    }

    #[inline]
    pub fn add(&mut self, x: usize, y: usize, c: usize, v: f32) {
        let i = self.idx(x, y, c);
        self.data[i] += v;
    }

    /// First three channels at a pixel as a `Vec3` (zero-padded if fewer).
    pub fn get_rgb(&self, x: usize, y: usize) -> Vec3 {
        let mut v = [0.0f32; 3];
        for (c, slot) in v.iter_mut().enumerate().take(self.channels.min(3)) {
            *slot = self.get(x, y, c);
        }
        Vec3::from_array_f32(v)
    }

    pub fn set_rgb(&mut self, x: usize, y: usize, v: Vec3) {
        let a = v.to_array_f32();
        for (c, value) in a.iter().enumerate().take(self.channels.min(3)) {
            self.set(x, y, c, *value);
        }
    }

    pub fn fill(&mut self, v: f32) {
        self.data.fill(v);
    }

    pub fn scale(&mut self, s: f32) {
        for v in &mut self.data {
            *v *= s;
        }
    }

    pub fn clamp01(&mut self) {
        for v in &mut self.data {
            *v = v.clamp(0.0, 1.0);
        }
    }

    /// Accumulate `o` into `self` (shapes must match).
    pub fn accumulate(&mut self, o: &ImageBuf) {
        debug_assert!(self.same_shape(o));
        for (a, b) in self.data.iter_mut().zip(o.data.iter()) {
            *a += *b;
        }
    }

    /// Mean of squared differences over all elements.
    pub fn mse(&self, o: &ImageBuf) -> Result<f64> {
        if !self.same_shape(o) {
            return Err(Error::Shape(format!(
                "mse shapes differ: {}x{}x{} vs {}x{}x{}",
                self.width, self.height, self.channels, o.width, o.height, o.channels
            )));
        }
        let mut acc = 0.0f64;
        for (a, b) in self.data.iter().zip(o.data.iter()) {
            let d = (*a - *b) as f64;
            acc += d * d;
        }
        Ok(acc / self.data.len() as f64)
    }

    /// Mean absolute difference over all elements.
    pub fn l1(&self, o: &ImageBuf) -> Result<f64> {
        if !self.same_shape(o) {
            return Err(Error::Shape("l1 shapes differ".into()));
        }
        let mut acc = 0.0f64;
        for (a, b) in self.data.iter().zip(o.data.iter()) {
            acc += ((*a - *b) as f64).abs();
        }
        Ok(acc / self.data.len() as f64)
    }

    pub fn max_abs_diff(&self, o: &ImageBuf) -> f32 {
        self.data
            .iter()
            .zip(o.data.iter())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f32::max)
    }

    pub fn map(&self, f: impl Fn(f32) -> f32) -> ImageBuf {
        ImageBuf {
            width: self.width,
            height: self.height,
            channels: self.channels,
            data: self.data.iter().map(|&v| f(v)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indexing_round_trip() {
        let mut b = ImageBuf::new(4, 3, 2);
        b.set(2, 1, 1, 7.5);
        assert_eq!(b.get(2, 1, 1), 7.5);
        assert_eq!(b.get(2, 1, 0), 0.0);
    }

    #[test]
    fn mse_and_l1() {
        let a = ImageBuf::from_fill(2, 2, 1, 0.5);
        let b = ImageBuf::from_fill(2, 2, 1, 0.0);
        assert!((a.mse(&b).unwrap() - 0.25).abs() < 1e-12);
        assert!((a.l1(&b).unwrap() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn shape_mismatch_is_error() {
        let a = ImageBuf::new(2, 2, 1);
        let b = ImageBuf::new(2, 3, 1);
        assert!(a.mse(&b).is_err());
    }
}
