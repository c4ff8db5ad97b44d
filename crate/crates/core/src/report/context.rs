//! Lazily computed objects shared between suites.

use std::sync::OnceLock;

use crate::cmsz_generators::{derive_generators, GeneratorSet};
use crate::error::Result;
use crate::exact_ring::PadicConfig;
use crate::finite_unitary::{
    classify_index3, enumerate_u1, j_groups, model_image, sylow2_generators, Ambient,
    Classification, FiniteGroup, ModelImage, SpecialElements, U1Enumeration,
};

use super::Config;

pub struct Context {
    pub cfg: PadicConfig,
    pub radius: u32,
    generators: OnceLock<GeneratorSet>,
    special: OnceLock<SpecialElements>,
    u1: OnceLock<U1Enumeration>,
    model: OnceLock<ModelImage>,
    ambient: OnceLock<Ambient>,
    classification: OnceLock<Classification>,
    jgroups: OnceLock<Vec<(String, FiniteGroup)>>,
}

impl Context {
    pub fn new(cfg: PadicConfig, radius: u32) -> Result<Self> {
        let ctx = Context {
            cfg,
            radius,
            generators: OnceLock::new(),
            special: OnceLock::new(),
            u1: OnceLock::new(),
            model: OnceLock::new(),
            ambient: OnceLock::new(),
            classification: OnceLock::new(),
            jgroups: OnceLock::new(),
        };
        let _ = ctx.generators.set(derive_generators()?);
        Ok(ctx)
    }

    pub fn config(&self) -> Config {
        Config {
            padic_precision: self.cfg.precision,
            padic_guard: self.cfg.guard,
            ball_radius: self.radius,
        }
    }

    pub fn generators(&self) -> &GeneratorSet {
        self.generators.get().expect("set in Context::new")
    }

    pub fn special(&self) -> &SpecialElements {
        self.special.get_or_init(SpecialElements::new)
    }

    pub fn u1(&self) -> Result<&U1Enumeration> {
        if let Some(u) = self.u1.get() {
            return Ok(u);
        }
        let u = enumerate_u1(self.special())?;
        Ok(self.u1.get_or_init(|| u))
    }

    pub fn model(&self) -> &ModelImage {
        self.model.get_or_init(|| model_image(self.special()))
    }

    pub fn ambient(&self) -> &Ambient {
        self.ambient
            .get_or_init(|| Ambient::new(self.model().image.clone()))
    }

    pub fn classification(&self) -> &Classification {
        self.classification
            .get_or_init(|| classify_index3(self.ambient(), &sylow2_generators(self.special())))
    }

    pub fn j_groups(&self) -> &[(String, FiniteGroup)] {
        self.jgroups.get_or_init(|| j_groups(self.special()))
    }
}
