pub mod corpus;
pub mod extract;
pub mod gateway;
pub mod java;
pub mod judge;
pub mod metrics;
pub mod patch;
pub mod pipeline;
pub mod prompt;
pub mod stats;
pub mod verify;
