# Root conftest so `tests.*` helper modules are importable.
