from dependency_injector import containers, providers

from plpf.services.analytic.applications_service_impl import ApplicationsServiceImpl
from plpf.services.analytic.broadcast_service_impl import BroadcastServiceImpl
from plpf.services.analytic.connectivity_service_impl import ConnectivityServiceImpl
from plpf.services.analytic.path_loss_service_impl import PathLossServiceImpl
from plpf.services.experiment.experiment_service_impl import ExperimentServiceImpl
from plpf.services.experiment.validation_service_impl import ValidationServiceImpl
from plpf.services.fading_service_impl import FadingServiceImpl
from plpf.services.geometry_service_impl import GeometryServiceImpl
from plpf.services.monte_carlo.monte_carlo_service_impl import MonteCarloServiceImpl


class Container(containers.DeclarativeContainer):
    # Sampling
    fading_service = providers.Singleton(FadingServiceImpl)
    geometry_service = providers.Singleton(
        GeometryServiceImpl,
        fading_service=fading_service,
    )
    monte_carlo_service = providers.Singleton(
        MonteCarloServiceImpl,
        geometry_service=geometry_service,
    )

    # Closed forms
    path_loss_service = providers.Singleton(
        PathLossServiceImpl,
        fading_service=fading_service,
    )
    connectivity_service = providers.Singleton(
        ConnectivityServiceImpl,
        fading_service=fading_service,
        path_loss_service=path_loss_service,
    )
    broadcast_service = providers.Singleton(
        BroadcastServiceImpl,
        fading_service=fading_service,
    )
    applications_service = providers.Singleton(
        ApplicationsServiceImpl,
        fading_service=fading_service,
        path_loss_service=path_loss_service,
        connectivity_service=connectivity_service,
    )

    # Experiment runner
    experiment_service = providers.Singleton(
        ExperimentServiceImpl,
        fading_service=fading_service,
        geometry_service=geometry_service,
        path_loss_service=path_loss_service,
        connectivity_service=connectivity_service,
        broadcast_service=broadcast_service,
        applications_service=applications_service,
        monte_carlo_service=monte_carlo_service,
    )
    validation_service = providers.Singleton(
        ValidationServiceImpl,
        fading_service=fading_service,
        geometry_service=geometry_service,
        path_loss_service=path_loss_service,
        connectivity_service=connectivity_service,
        broadcast_service=broadcast_service,
        applications_service=applications_service,
        monte_carlo_service=monte_carlo_service,
    )
