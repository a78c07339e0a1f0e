"""
Read configuration from the environment (or ``.env``) with casts inferred from
the default value.
"""
from decouple import Csv, config as _config, undefined


def config(option: str, default=undefined, *args, **kwargs):
    """
    Look up ``option``, casting to the type of ``default`` unless told otherwise.

    Pass ``split=True`` to read a comma separated value into a list.
    """
    if kwargs.pop("split", False):
        kwargs["cast"] = Csv()
        if default == []:
            default = ""

    if default is not undefined and default is not None:
        kwargs.setdefault("cast", type(default))
    return _config(option, default=default, *args, **kwargs)
