from .coxauttask import CoxautTask
from .autringtask import AutRingTask, SymmetriesTask, DimBoundTask
from .mdstask import AutMdsTask, GitConeTask, VeroneseTask
