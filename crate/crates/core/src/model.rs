//! Domain types shared by the schedulers, metrics and report layers.
//!
//! Everything here is an immutable value once built. Tracks are plain
//! integers; the head and every queued request must lie inside the
//! [`DiskGeometry`] they are validated against.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Track index on the modeled disk.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct Track(pub u32);

impl Track {
    pub const fn new(value: u32) -> Self {
        Track(value)
    }

    pub const fn value(self) -> u32 {
        self.0
    }

    /// Absolute distance in tracks.
    pub fn distance(self, other: Track) -> u64 {
        u64::from(self.0.abs_diff(other.0))
    }
}

impl From<u32> for Track {
    fn from(value: u32) -> Self {
        Track(value)
    }
}

impl fmt::Display for Track {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Inclusive track bounds of the disk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DiskGeometry {
    pub min_track: Track,
    pub max_track: Track,
}

impl DiskGeometry {
    pub const DEFAULT_MIN_TRACK: u32 = 0;
    pub const DEFAULT_MAX_TRACK: u32 = 180;

    pub fn new(min_track: u32, max_track: u32) -> Result<Self, ModelError> {
        let geometry = DiskGeometry {
            min_track: Track(min_track),
            max_track: Track(max_track),
        };
        geometry.check()?;
        Ok(geometry)
    }

    pub fn check(&self) -> Result<(), ModelError> {
        if self.min_track >= self.max_track {
            return Err(ModelError::EmptyGeometry {
                min: self.min_track.0,
                max: self.max_track.0,
            });
        }
        Ok(())
    }

    pub fn contains(&self, track: Track) -> bool {
        self.min_track <= track && track <= self.max_track
    }

    /// Distance between the two physical ends.
    pub fn width(&self) -> u64 {
        self.min_track.distance(self.max_track)
    }

    /// Mirror image of `track` about the centre of the disk.
    pub fn reflect(&self, track: Track) -> Track {
        Track(self.min_track.0 + self.max_track.0 - track.0)
    }
}

impl Default for DiskGeometry {
    fn default() -> Self {
        DiskGeometry {
            min_track: Track(Self::DEFAULT_MIN_TRACK),
            max_track: Track(Self::DEFAULT_MAX_TRACK),
        }
    }
}

/// Pending requests in arrival order. Duplicates are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RequestQueue(Vec<Track>);

impl RequestQueue {
    pub fn new(requests: Vec<Track>) -> Self {
        RequestQueue(requests)
    }

    pub fn from_values<I: IntoIterator<Item = u32>>(values: I) -> Self {
        RequestQueue(values.into_iter().map(Track).collect())
    }

    pub fn requests(&self) -> &[Track] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Track> + '_ {
        self.0.iter().copied()
    }

    pub fn lowest(&self) -> Option<Track> {
        self.iter().min()
    }

    pub fn highest(&self) -> Option<Track> {
        self.iter().max()
    }
}

impl FromIterator<Track> for RequestQueue {
    fn from_iter<I: IntoIterator<Item = Track>>(iter: I) -> Self {
        RequestQueue(iter.into_iter().collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct HeadState {
    pub position: Track,
}

impl HeadState {
    pub const fn at(position: u32) -> Self {
        HeadState {
            position: Track(position),
        }
    }
}

/// Constants of the rotational transfer-time model.
///
/// `bytes_to_transfer` is the payload per request, `bytes_per_track` the
/// track capacity and `rotation_speed` is in revolutions per second.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TransferModel {
    pub bytes_to_transfer: u64,
    pub bytes_per_track: u64,
    pub rotation_speed: f64,
}

impl TransferModel {
    pub const DEFAULT_BYTES_TO_TRANSFER: u64 = 30_000;
    pub const DEFAULT_BYTES_PER_TRACK: u64 = 32_256;
    pub const DEFAULT_ROTATION_SPEED: f64 = 120.0;

    pub fn new(
        bytes_to_transfer: u64,
        bytes_per_track: u64,
        rotation_speed: f64,
    ) -> Result<Self, ModelError> {
        let model = TransferModel {
            bytes_to_transfer,
            bytes_per_track,
            rotation_speed,
        };
        model.check()?;
        Ok(model)
    }

    pub fn check(&self) -> Result<(), ModelError> {
        let speed_ok = self.rotation_speed.is_finite() && self.rotation_speed > 0.0;
        if self.bytes_to_transfer == 0 || self.bytes_per_track == 0 || !speed_ok {
            return Err(ModelError::InvalidModel(*self));
        }
        Ok(())
    }
}

impl Default for TransferModel {
    fn default() -> Self {
        TransferModel {
            bytes_to_transfer: Self::DEFAULT_BYTES_TO_TRANSFER,
            bytes_per_track: Self::DEFAULT_BYTES_PER_TRACK,
            rotation_speed: Self::DEFAULT_ROTATION_SPEED,
        }
    }
}

/// Nameplate figures of the reference 400 GB drive. Informational only;
/// no computation reads them.
pub mod reference_drive {
    pub const CAPACITY_GB: u64 = 400;
    pub const SECTORS_PER_TRACK: u64 = 63;
    pub const SECTOR_SIZE_BYTES: u64 = 512;
    pub const CYLINDERS: u64 = 16_383;
    pub const TOTAL_SECTORS: u64 = 781_422_768;
}

/// A queue, head and geometry that passed [`validate_instance`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub queue: RequestQueue,
    pub head: HeadState,
    pub geometry: DiskGeometry,
}

impl Instance {
    pub fn new(
        queue: RequestQueue,
        head: HeadState,
        geometry: DiskGeometry,
    ) -> Result<Self, ModelError> {
        validate_instance(queue, head, geometry)
    }

    /// Re-checks an instance that may have come from deserialization.
    pub fn validate(self) -> Result<Self, ModelError> {
        validate_instance(self.queue, self.head, self.geometry)
    }
}

/// Checks that the geometry is non-empty and that the head and every
/// request lie within it. All offending tracks are reported, head first.
pub fn validate_instance(
    queue: RequestQueue,
    head: HeadState,
    geometry: DiskGeometry,
) -> Result<Instance, ModelError> {
    geometry.check()?;
    let offending: Vec<u32> = std::iter::once(head.position)
        .chain(queue.iter())
        .filter(|t| !geometry.contains(*t))
        .map(Track::value)
        .collect();
    if !offending.is_empty() {
        return Err(ModelError::OutOfRange {
            tracks: offending,
            min: geometry.min_track.0,
            max: geometry.max_track.0,
        });
    }
    Ok(Instance {
        queue,
        head,
        geometry,
    })
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError {
    #[error("track(s) {tracks:?} outside disk range [{min}, {max}]")]
    OutOfRange {
        tracks: Vec<u32>,
        min: u32,
        max: u32,
    },
    #[error("empty geometry: min track {min} must be below max track {max}")]
    EmptyGeometry { min: u32, max: u32 },
    #[error(
        "invalid transfer model {0:?}: bytes, track bytes and rotation speed must be positive"
    )]
    InvalidModel(TransferModel),
}
