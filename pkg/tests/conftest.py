import pytest

from src.components import catalog
from src.components.group_core import conjugacy_classes
from src.components.subgroup_lattice import enumerate_subgroup_classes
from src.pipeline.beta_pipeline import FIELD_TAGS, analyze
from src.utils import Settings


@pytest.fixture(scope="session")
def settings():
    return Settings()


@pytest.fixture(scope="session")
def build_group(settings):
    cache = {}

    def _build(name):
        if name not in cache:
            cache[name] = catalog.build(catalog.parse_catalog_name(name), settings.order_cap,
                                        settings.assoc_samples)
        return cache[name]

    return _build


@pytest.fixture(scope="session")
def classes_of(build_group):
    cache = {}

    def _classes(name):
        if name not in cache:
            cache[name] = conjugacy_classes(build_group(name))
        return cache[name]

    return _classes


@pytest.fixture(scope="session")
def lattice_of(build_group):
    cache = {}

    def _lattice(name):
        if name not in cache:
            cache[name] = enumerate_subgroup_classes(build_group(name))
        return cache[name]

    return _lattice


@pytest.fixture(scope="session")
def report_of(build_group, settings):
    """Full analysis over every field, cached per group name."""
    cache = {}

    def _report(name):
        if name not in cache:
            cache[name] = analyze(build_group(name), FIELD_TAGS, settings)
        return cache[name]

    return _report
