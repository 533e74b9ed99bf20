class Singleton(type):
    """
        allow only a single instance to be made of a class that uses this metaclass

        attributes:
            _instances (dict): class types and the instance created for each

        return:
            instance: a new instance, or the one made on the first call
    """
    _instances = {}

    def __call__(cls, *args, **kwargs):
        if cls not in cls._instances:
            cls._instances[cls] = super(Singleton, cls).__call__(*args, **kwargs)
        return cls._instances[cls]

    @classmethod
    def reset(mcs, cls) -> None:
        """Forget the cached instance of ``cls`` (used by tests that tweak configuration)."""
        mcs._instances.pop(cls, None)
