from typing import Callable, Optional


def _register_generic(module_dict, module_name, module):
    if module_name in module_dict:
        raise KeyError(f"'{module_name}' is already registered")
    module_dict[module_name] = module


class Registry(dict):
    """Name -> callable table filled through the ``register`` decorator."""

    def __init__(self, *args, **kwargs):
        super(Registry, self).__init__(*args, **kwargs)

    def register(self, module_name: str, module: Optional[Callable] = None):
        if module is not None:
            _register_generic(self, module_name, module)
            return

        def register_fn(fn):
            _register_generic(self, module_name, fn)
            return fn

        return register_fn

    def names(self):
        return sorted(self.keys())
