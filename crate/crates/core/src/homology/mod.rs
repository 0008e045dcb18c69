//! Presented modules, minimal free resolutions and deficiency modules.

mod ext;
mod presented;
mod resolution;

pub use ext::DeficiencyBattery;
pub use presented::PresentedModule;
pub use resolution::FreeResolution;

#[cfg(test)]
mod tests;
