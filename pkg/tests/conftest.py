import pytest

from plpf.models.fading_spec import FadingSpec
from plpf.models.network_config import STANDARD_NETWORK
from plpf.services.analytic.applications_service_impl import ApplicationsServiceImpl
from plpf.services.analytic.broadcast_service_impl import BroadcastServiceImpl
from plpf.services.analytic.connectivity_service_impl import ConnectivityServiceImpl
from plpf.services.analytic.path_loss_service_impl import PathLossServiceImpl
from plpf.services.experiment.experiment_service_impl import ExperimentServiceImpl
from plpf.services.experiment.validation_service_impl import ValidationServiceImpl
from plpf.services.fading_service_impl import FadingServiceImpl
from plpf.services.geometry_service_impl import GeometryServiceImpl
from plpf.services.monte_carlo.monte_carlo_service_impl import MonteCarloServiceImpl


# -------------------------------
# Service fixtures (wired by hand, same graph as plpf.container.Container)
# -------------------------------

@pytest.fixture(scope="session")
def fading_service():
    return FadingServiceImpl()


@pytest.fixture(scope="session")
def geometry_service(fading_service):
    return GeometryServiceImpl(fading_service=fading_service)


@pytest.fixture(scope="session")
def path_loss_service(fading_service):
    return PathLossServiceImpl(fading_service=fading_service)


@pytest.fixture(scope="session")
def connectivity_service(fading_service, path_loss_service):
    return ConnectivityServiceImpl(fading_service=fading_service, path_loss_service=path_loss_service)


@pytest.fixture(scope="session")
def broadcast_service(fading_service):
    return BroadcastServiceImpl(fading_service=fading_service)


@pytest.fixture(scope="session")
def applications_service(fading_service, path_loss_service, connectivity_service):
    return ApplicationsServiceImpl(fading_service=fading_service, path_loss_service=path_loss_service,
                                   connectivity_service=connectivity_service)


@pytest.fixture(scope="session")
def monte_carlo_service(geometry_service):
    return MonteCarloServiceImpl(geometry_service=geometry_service)


@pytest.fixture(scope="session")
def service_graph(fading_service, geometry_service, path_loss_service, connectivity_service, broadcast_service,
                  applications_service, monte_carlo_service):
    return dict(fading_service=fading_service, geometry_service=geometry_service,
                path_loss_service=path_loss_service, connectivity_service=connectivity_service,
                broadcast_service=broadcast_service, applications_service=applications_service,
                monte_carlo_service=monte_carlo_service)


@pytest.fixture(scope="session")
def experiment_service(service_graph):
    return ExperimentServiceImpl(**service_graph)


@pytest.fixture(scope="session")
def validation_service(service_graph):
    return ValidationServiceImpl(**service_graph)


# -------------------------------
# Common parameters
# -------------------------------

@pytest.fixture
def standard():
    """d = 2, alpha = 2: delta = 1, c_d = pi."""
    return STANDARD_NETWORK


@pytest.fixture
def rayleigh():
    return FadingSpec.rayleigh()


@pytest.fixture
def no_fading():
    return FadingSpec.degenerate()
