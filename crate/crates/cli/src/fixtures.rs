//! Bundled inputs with their expected JSON reports under the default seed
//! and sample count.

pub struct Fixture {
    pub name: &'static str,
    pub input: &'static str,
    pub expected: &'static str,
}

macro_rules! fixture {
    ($name:literal) => {
        Fixture {
            name: $name,
            input: include_str!(concat!("../fixtures/", $name, ".seqcm")),
            expected: include_str!(concat!("../fixtures/", $name, ".expected.json")),
        }
    };
}

pub fn fixtures() -> Vec<Fixture> {
    vec![
        fixture!("planes-xy-zt-5v"),
        fixture!("line-plane-embedded"),
        fixture!("embedded-xy-4v"),
        fixture!("planes-xy-zt-4v"),
        fixture!("planes-xy-zt-5v-mod-w"),
        fixture!("line-plane-classify-x-plus-z"),
        fixture!("planes-xy-zt-5v-harness"),
    ]
}

pub fn fixture(name: &str) -> Option<Fixture> {
    fixtures().into_iter().find(|f| f.name == name)
}
