from hypothesis import HealthCheck, settings

# exact double description is slow next to hypothesis' default deadline
settings.register_profile(
    "recfan",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much, HealthCheck.data_too_large],
)
settings.load_profile("recfan")
