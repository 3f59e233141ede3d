//! Disk-arm scheduling simulator.
//!
//! Implements FIFO, SSTF, SCAN, C-SCAN, LOOK and ODSA (nearest-end sweep)
//! over a static request queue, a brute-force optimal oracle for small
//! queues, seek and transfer-time metrics, and CSV/JSON reporting.
//!
//! ```
//! use disksched::{paper_case, run_comparison, Algorithm, TransferModel};
//!
//! let case = paper_case(1).unwrap();
//! let report = run_comparison(&case, &TransferModel::default(), &[Algorithm::Odsa]).unwrap();
//! assert_eq!(report.rows[0].metrics.total_seek, 195);
//! assert_eq!(report.rows[0].metrics.average_seek, Some(24.375));
//! ```

pub mod campaign;
pub mod metrics;
pub mod model;
pub mod report;
pub mod schedulers;
pub mod workload;

pub use campaign::{check_instance, run_property_campaign, CampaignConfig, CampaignSummary};
pub use metrics::{average_seek, display5, transfer_time, MetricRow, SeekSummary};
pub use model::{
    validate_instance, DiskGeometry, HeadState, Instance, ModelError, RequestQueue, Track,
    TransferModel,
};
pub use report::{emit, run_comparison, ComparisonReport, Emit, Format, HeadPathSeries};
pub use schedulers::{schedule, Algorithm, Schedule};
pub use workload::{paper_case, parse_requests, render_requests, WorkloadSpec};
