"""随包安装的示例网络"""
